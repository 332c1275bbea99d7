#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "field_file.hpp"
#include "json.hpp"
#include "logres/counts.hpp"
#include "logres/error.hpp"
#include "logres/logchern.hpp"
#include "logres/p2solver.hpp"
#include "logres/poly_text.hpp"
#include "sweeps.hpp"

namespace logres::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json integer_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json tolerances_json(const Tolerances& t) {
  return json{{"profile", t.profile},
              {"merge", t.merge},
              {"residual", t.residual},
              {"root_convergence", t.root_convergence},
              {"newton_target", t.newton_target},
              {"candidate_filter", t.candidate_filter},
              {"degeneracy", t.degeneracy},
              {"on_divisor", t.on_divisor},
              {"snap_distance", t.snap_distance},
              {"snap_height", t.snap_height}};
}

struct DeltaArgs {
  int k = 0, d = -1, n = 0;
  bool all_forms = false;
  bool json = false;
};

int cmd_delta(const DeltaArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const counts::CountParams p{a.k, a.d, a.n};
  try {
    p.validate();
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  const auto sum = counts::delta_sum(p);
  const auto closed = counts::delta_closed(p);
  const auto alternating = counts::delta_alternating(p);
  const bool agree = sum == closed && closed == alternating;
  const auto cls = counts::classify(p);

  if (a.json) {
    json j;
    j["command"] = "delta";
    j["parameters"] = {{"k", a.k}, {"d", a.d}, {"n", a.n}};
    j["delta"] = integer_json(sum);
    j["path"] = "delta_sum";
    j["forms"] = {{"delta_sum", integer_json(sum)},
                  {"delta_closed", integer_json(closed)},
                  {"delta_alternating", integer_json(alternating)}};
    j["forms_agree"] = agree;
    j["classification"] = {{"verdict", counts::to_string(cls.verdict)}, {"case", counts::to_string(cls.case_label)}};
    out << j.dump(2) << '\n';
  } else {
    out << "delta(k=" << a.k << ", d=" << a.d << ", n=" << a.n << ") = " << sum << "   [path: delta_sum]\n";
    out << "classification: " << counts::to_string(cls.verdict) << " (case " << counts::to_string(cls.case_label)
        << ")\n";
    if (a.all_forms) {
      out << std::left << std::setw(20) << "  double sum" << sum << '\n'
          << std::setw(20) << "  closed form" << closed << '\n'
          << std::setw(20) << "  alternating sum" << alternating << '\n';
    }
    out << "forms agree: " << (agree ? "yes" : "NO") << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms(start) << " ms\n";
  }
  if (!agree) {
    err << "internal disagreement between delta forms\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 0;
  int max_k = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto defaults = default_bounds(a.suite);
  const int max_n = a.max_n > 0 ? a.max_n : defaults.max_n;
  const int max_k = a.max_k > 0 ? a.max_k : defaults.max_k;
  const int min_n = (a.suite == "smooth" || a.suite == "delta") ? 2 : 1;
  if (max_n < min_n || max_k < 1) {
    err << "usage error: bounds below the minimal grid (max-n >= " << min_n << ", max-k >= 1)\n";
    return kUsage;
  }
  const auto r = run_sweep(a.suite, max_n, max_k);
  if (a.json) {
    json j;
    j["command"] = "verify";
    j["suite"] = r.suite;
    j["bounds"] = {{"max_n", r.max_n}, {"max_k", r.max_k}};
    j["paths"] = r.paths;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["counterexamples"] = r.counterexamples;
    j["passed"] = r.passed();
    out << j.dump(2) << '\n';
  } else {
    out << "suite " << r.suite << " (max-n " << r.max_n << ", max-k " << r.max_k << ")\n";
    for (const auto& path : r.paths) out << "  path: " << path << '\n';
    out << "  checks: " << r.checks << ", failures: " << r.failures << '\n';
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms(start) << " ms\n";
  }
  return r.passed() ? kSuccess : kVerificationFailed;
}

struct EulerArgs {
  int n = 0;
  std::vector<int> degrees;
  bool json = false;
};

int cmd_euler(const EulerArgs& a, std::ostream& out, std::ostream& err) {
  const logchern::Divisor div{a.n, a.degrees, {}};
  try {
    div.validate();
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  const auto chi = logchern::euler_complement(div);
  if (a.json) {
    json j;
    j["command"] = "euler";
    j["n"] = a.n;
    j["degrees"] = a.degrees;
    j["euler_characteristic"] = integer_json(chi);
    j["path"] = "log_total_ncd";
    out << j.dump(2) << '\n';
  } else {
    out << "chi(P^" << a.n << " \\ D), D of degrees (";
    for (std::size_t i = 0; i < a.degrees.size(); ++i) out << (i ? "," : "") << a.degrees[i];
    out << ") = " << chi << "   [path: log_total_ncd]\n";
  }
  return kSuccess;
}

struct SingArgs {
  std::string file;
  std::vector<std::string> divisor;
  bool json = false;
  bool timing = false;
};

json point_json(const p2::SingularPoint& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(json::array({c.real() + 0.0, c.imag() + 0.0}));
  json j;
  j["coords"] = coords;
  j["chart"] = p.chart;
  j["multiplicity"] = p.multiplicity;
  j["nondegenerate"] = p.nondegenerate;
  j["on_divisor"] = p.on_divisor;
  j["components"] = p.components;
  if (p.index) {
    j["milnor"] = p.index->milnor;
    j["gsv"] = p.index->gsv ? json(*p.index->gsv) : json(nullptr);
    j["log_index"] = p.index->log_index;
  } else {
    j["milnor"] = nullptr;
    j["gsv"] = nullptr;
    j["log_index"] = nullptr;
  }
  j["exact"] = p.exact;
  j["residual"] = p.residual;
  j["jacobian_ratio"] = p.jacobian_ratio;
  j["decided_by"] = {{"divisor", p.divisor_decided_by}, {"nondegeneracy", p.nondegeneracy_decided_by}};
  return j;
}

std::string format_complex(const std::complex<double>& z) {
  std::ostringstream os;
  os << std::setprecision(12);
  const double re = z.real() + 0.0;
  const double im = z.imag() + 0.0;
  if (im == 0) {
    os << re;
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

int cmd_sing(const SingArgs& a, const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::string contents;
  if (a.file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    contents = ss.str();
  } else {
    std::ifstream in(a.file, std::ios::binary);
    if (!in) {
      err << "usage error: cannot read " << a.file << '\n';
      return kUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    contents = ss.str();
  }

  FieldText field;
  std::vector<poly::Polynomial> divisor;
  try {
    field = parse_field_text(contents);
    if (field.components.size() != 3) {
      err << "usage error: the singularity solver needs a field on P^2 (3 components), got "
          << field.components.size() << '\n';
      return kUsage;
    }
    const auto vars = text::VariableNames::homogeneous(2);
    for (const auto& d : a.divisor) divisor.push_back(text::parse_polynomial(d, vars));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }

  std::optional<foliation::HomogeneousVectorField> v;
  try {
    v.emplace(field.components);
  } catch (const foliation::InvalidFoliation& e) {
    err << "invalid foliation: " << e.what() << '\n';
    return kInvalidFoliation;
  }
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    if (divisor[i].is_zero() || !divisor[i].is_homogeneous() || divisor[i].total_degree() < 1) {
      err << "usage error: divisor component " << i << " must be a nonconstant homogeneous polynomial\n";
      return kUsage;
    }
    if (!foliation::is_invariant(*v, divisor[i])) {
      err << "usage error: divisor component '" << a.divisor[i] << "' is not invariant by the foliation\n";
      return kUsage;
    }
  }

  p2::SolverOptions opts;
  opts.tol = tol;
  p2::SingularityInventory inv;
  try {
    inv = p2::enumerate_singularities(*v, divisor, opts);
  } catch (const CommonFactorError& e) {
    err << "invalid foliation: " << e.what() << '\n';
    return kInvalidFoliation;
  } catch (const ConvergenceError& e) {
    err << "uncertified: " << e.what() << '\n';
    return kUncertified;
  }

  std::vector<int> degrees;
  for (const auto& f : divisor) degrees.push_back(f.total_degree());
  const mpz_class predicted = divisor.empty() ? counts::baum_bott_total(2, inv.degree)
                                              : counts::count_outside_ncd(2, degrees, inv.degree);
  const char* prediction_path = divisor.empty() ? "baum_bott_total" : "count_outside_ncd";
  const bool agrees = inv.certified() && predicted == inv.off_divisor;

  if (a.json) {
    json j;
    j["schema"] = kSingSchemaId;
    j["command"] = "sing";
    j["parameters"] = {{"field", field.lines}, {"divisor", a.divisor}, {"degrees", degrees}};
    j["tolerances"] = tolerances_json(tol);
    j["degree"] = inv.degree;
    j["total"] = inv.total_with_multiplicity;
    j["on_divisor"] = inv.on_divisor;
    j["off_divisor"] = inv.off_divisor;
    j["predicted_off"] = integer_json(predicted);
    j["prediction_path"] = prediction_path;
    j["certified"] = inv.certified();
    j["agrees"] = agrees;
    json points = json::array();
    for (const auto& p : inv.points) points.push_back(point_json(p));
    j["points"] = points;
    j["warnings"] = inv.warnings;
    if (a.timing) j["wall_clock_ms"] = elapsed_ms(start);
    out << j.dump(2) << '\n';
  } else {
    out << "foliation of degree " << inv.degree << " on P^2, tolerance profile " << tol.profile << '\n';
    out << std::left << std::setw(4) << "#" << std::setw(44) << "point" << std::setw(7) << "chart" << std::setw(6)
        << "mult" << std::setw(8) << "nondeg" << std::setw(8) << "on D" << std::setw(6) << "mu" << std::setw(6)
        << "gsv" << std::setw(6) << "log" << "decided by\n";
    for (std::size_t i = 0; i < inv.points.size(); ++i) {
      const auto& p = inv.points[i];
      const std::string coords = "(" + format_complex(p.coords[0]) + " : " + format_complex(p.coords[1]) + " : " +
                                 format_complex(p.coords[2]) + ")";
      out << std::setw(4) << i << std::setw(44) << coords << std::setw(7) << p.chart << std::setw(6) << p.multiplicity
          << std::setw(8) << (p.nondegenerate ? "yes" : "NO") << std::setw(8) << (p.on_divisor ? "yes" : "no")
          << std::setw(6) << (p.index ? std::to_string(p.index->milnor) : "-") << std::setw(6)
          << (p.index && p.index->gsv ? std::to_string(*p.index->gsv) : "-") << std::setw(6)
          << (p.index ? std::to_string(p.index->log_index) : "-") << p.divisor_decided_by << '\n';
    }
    out << "total (with multiplicity): " << inv.total_with_multiplicity << '\n';
    out << "on divisor: " << inv.on_divisor << ", off divisor: " << inv.off_divisor << '\n';
    out << "predicted off divisor: " << predicted << "   [path: " << prediction_path << "]\n";
    out << "certified: " << (inv.certified() ? "yes" : "no") << ", agrees: " << (agrees ? "yes" : "no") << '\n';
    for (const auto& w : inv.warnings) out << "warning: " << w << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms(start) << " ms\n";
  }
  if (!inv.certified()) {
    err << "uncertified: degenerate singularities present\n";
    return kUncertified;
  }
  return agrees ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::string_view tolerance_profile) {
  CLI::App app{"logres: residue formulas for logarithmic foliations on projective space", "logres"};
  app.require_subcommand(1);

  DeltaArgs delta;
  auto* delta_cmd = app.add_subcommand("delta", "singularities off a smooth invariant hypersurface");
  delta_cmd->add_option("-k", delta.k, "divisor degree (>= 1)")->required();
  delta_cmd->add_option("-d", delta.d, "foliation degree (>= 0)")->required();
  delta_cmd->add_option("-n", delta.n, "projective dimension (>= 2)")->required();
  delta_cmd->add_flag("--all-forms", delta.all_forms, "print every computation route");
  delta_cmd->add_flag("--json", delta.json, "machine-readable report");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive identity sweeps");
  verify_cmd->add_option("--suite", verify.suite, "smooth | ncd | delta | logchern")
      ->required()
      ->check(CLI::IsMember({"smooth", "ncd", "delta", "logchern"}));
  verify_cmd->add_option("--max-n", verify.max_n, "largest projective dimension");
  verify_cmd->add_option("--max-k", verify.max_k, "largest degree");
  verify_cmd->add_flag("--json", verify.json, "machine-readable report");

  EulerArgs euler;
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of P^n minus a normal-crossing divisor");
  euler_cmd->add_option("-n", euler.n, "projective dimension")->required();
  euler_cmd->add_option("degrees", euler.degrees, "component degrees")->required();
  euler_cmd->add_flag("--json", euler.json, "machine-readable report");

  SingArgs sing;
  auto* sing_cmd = app.add_subcommand("sing", "enumerate the singularities of a foliation on P^2");
  sing_cmd->add_option("field", sing.file, "vector-field file, one component per line ('-' for stdin)")->required();
  sing_cmd->add_option("--divisor", sing.divisor, "invariant divisor component (repeatable)");
  sing_cmd->add_flag("--json", sing.json, "machine-readable report");
  sing_cmd->add_flag("--timing", sing.timing, "include wall-clock time in the JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Tolerances tol;
  try {
    tol = Tolerances::from_profile(tolerance_profile);
  } catch (const PreconditionError& e) {
    err << "usage error: LOGRES_TOLERANCE_PROFILE: " << e.what() << '\n';
    return kUsage;
  }

  if (*delta_cmd) return cmd_delta(delta, out, err);
  if (*verify_cmd) return cmd_verify(verify, out, err);
  if (*euler_cmd) return cmd_euler(euler, out, err);
  if (*sing_cmd) return cmd_sing(sing, tol, out, err);
  return kUsage;
}

}  // namespace logres::cli
