#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "json.hpp"

using logres::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, std::string_view profile = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, profile);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LOGRES_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, DeltaText) {
  const auto r = cli({"delta", "-k", "2", "-d", "3", "-n", "2", "--all-forms"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 7"), std::string::npos);
  EXPECT_NE(r.out.find("closed form"), std::string::npos);
  EXPECT_NE(r.out.find("elapsed"), std::string::npos);
}

TEST(Cli, DeltaJson) {
  const auto r = cli({"delta", "-k", "5", "-d", "1", "-n", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["delta"], -51);
  EXPECT_EQ(j["classification"]["case"], "1c");
  EXPECT_EQ(j["forms_agree"], true);
}

TEST(Cli, DeltaHugeValueIsAString) {
  const auto j = json::parse(cli({"delta", "-k", "1", "-d", "1000", "-n", "9", "--json"}).out);
  EXPECT_TRUE(j["delta"].is_string());
  EXPECT_EQ(j["delta"], "1000000000000000000000000000");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"delta", "-k", "0", "-d", "1", "-n", "2"}).code, 2);
  EXPECT_EQ(cli({"delta", "-k", "1", "-d", "1"}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "bogus"}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "smooth", "--max-n", "1"}).code, 2);
  EXPECT_EQ(cli({"euler", "-n", "2", "0"}).code, 2);
  EXPECT_EQ(cli({"delta", "-k", "1", "-d", "1", "-n", "2"}, "lenient").code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  for (const char* suite : {"smooth", "ncd", "delta", "logchern"}) {
    const auto r = cli({"verify", "--suite", suite, "--max-n", "3", "--max-k", "2", "--json"});
    EXPECT_EQ(r.code, 0) << suite;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_GT(j["checks"].get<long>(), 0);
    EXPECT_TRUE(j["counterexamples"].empty());
  }
}

TEST(Cli, Euler) {
  const std::vector<std::pair<std::vector<std::string>, long>> cases{
      {{"euler", "-n", "2", "1"}, 1}, {{"euler", "-n", "2", "3"}, 3}, {{"euler", "-n", "3", "2"}, 0},
      {{"euler", "-n", "2", "1", "1"}, 0}};
  for (auto [args, chi] : cases) {
    args.push_back("--json");
    const auto r = cli(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["euler_characteristic"], chi);
  }
}

TEST(Cli, SingWorkedExample) {
  const auto r = cli({"sing", fixture("worked.field"), "--divisor", "z2", "--divisor", "z0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "logres.sing-report/1");
  EXPECT_EQ(j["total"], 7);
  EXPECT_EQ(j["off_divisor"], 2);
  EXPECT_EQ(j["predicted_off"], 2);
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(j["points"].size(), 7u);
  EXPECT_FALSE(j.contains("wall_clock_ms"));
}

TEST(Cli, SingTextReport) {
  const auto r = cli({"sing", fixture("worked.field"), "--divisor", "z2", "--divisor", "z0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("off divisor: 2"), std::string::npos);
  EXPECT_NE(r.out.find("count_outside_ncd"), std::string::npos);
}

TEST(Cli, SingTranslation) {
  const auto r = cli({"sing", fixture("translation.field"), "--divisor", "z1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["off_divisor"], 0);
  EXPECT_EQ(j["predicted_off"], 0);
}

TEST(Cli, SingWithoutDivisorUsesTotal) {
  const auto j = json::parse(cli({"sing", fixture("worked.field"), "--json"}).out);
  EXPECT_EQ(j["prediction_path"], "baum_bott_total");
  EXPECT_EQ(j["predicted_off"], 7);
  EXPECT_EQ(j["agrees"], true);
}

TEST(Cli, SingExitCodes) {
  EXPECT_EQ(cli({"sing", fixture("malformed.field")}).code, 2);
  EXPECT_EQ(cli({"sing", fixture("missing.field")}).code, 2);
  EXPECT_EQ(cli({"sing", fixture("worked.field"), "--divisor", "z1"}).code, 2);
  EXPECT_EQ(cli({"sing", fixture("worked.field"), "--divisor", "z1 +"}).code, 2);
  EXPECT_EQ(cli({"sing", fixture("radial.field")}).code, 3);
  EXPECT_EQ(cli({"sing", fixture("common_factor.field")}).code, 3);
  const auto degenerate = cli({"sing", fixture("degenerate.field"), "--json"});
  EXPECT_EQ(degenerate.code, 4);
  EXPECT_EQ(json::parse(degenerate.out)["certified"], false);
}

TEST(Cli, ParseErrorReportsOffset) {
  const auto r = cli({"sing", fixture("malformed.field")});
  EXPECT_NE(r.err.find("offset"), std::string::npos);
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::string> args{"sing", fixture("worked.field"), "--divisor", "z2", "--divisor", "z0", "--json"};
  EXPECT_EQ(cli(args).out, cli(args).out);
  const std::vector<std::string> delta{"delta", "-k", "3", "-d", "4", "-n", "5", "--json"};
  EXPECT_EQ(cli(delta).out, cli(delta).out);
}

TEST(Cli, TimingAddsWallClock) {
  const auto j = json::parse(cli({"sing", fixture("worked.field"), "--json", "--timing"}).out);
  EXPECT_TRUE(j.contains("wall_clock_ms"));
}

TEST(Cli, StrictProfile) {
  const auto r = cli({"sing", fixture("worked.field"), "--divisor", "z2", "--divisor", "z0", "--json"}, "strict");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tolerances"]["profile"], "strict");
  EXPECT_EQ(j["off_divisor"], 2);
}
