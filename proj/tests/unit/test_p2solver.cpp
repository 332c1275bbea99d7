#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fields.hpp"
#include "generators.hpp"
#include "logres/counts.hpp"
#include "logres/error.hpp"
#include "logres/p2solver.hpp"

using namespace logres;
using namespace logres::p2;
using fields::parse;

namespace {

using Coords = std::array<std::complex<double>, 3>;

bool contains(const SingularityInventory& inv, const Coords& q, double tol = 1e-10) {
  return std::any_of(inv.points.begin(), inv.points.end(),
                     [&](const SingularPoint& p) { return projective_distance(p.coords, q) < tol; });
}

// Resamples until the field is valid, isolated and nondegenerate.
template <class Make>
std::optional<SingularityInventory> certified_inventory(Make make, const std::vector<Polynomial>& divisor,
                                                        const SolverOptions& opts = {}) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    try {
      const HomogeneousVectorField v(make());
      auto inv = enumerate_singularities(v, divisor, opts);
      if (inv.certified()) return inv;
    } catch (const foliation::InvalidFoliation&) {
    } catch (const CommonFactorError&) {
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(P2Solver, WorkedExample) {
  const auto inv = enumerate_singularities(fields::worked_p2(), {parse("z2", 2), parse("z0", 2)});
  EXPECT_EQ(inv.degree, 2);
  EXPECT_EQ(inv.points.size(), 7u);
  EXPECT_EQ(inv.total_with_multiplicity, 7);
  EXPECT_EQ(inv.off_divisor, 2);
  EXPECT_EQ(inv.on_divisor, 5);
  EXPECT_TRUE(inv.certified());
  EXPECT_TRUE(contains(inv, {1.0, 1.0, 1.0}));
  EXPECT_TRUE(contains(inv, {1.0, -1.0, 1.0}));
  for (const auto& p : inv.points) {
    EXPECT_TRUE(p.nondegenerate);
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.multiplicity, 1);
    ASSERT_TRUE(p.index.has_value());
    EXPECT_EQ(p.index->milnor, 1);
    EXPECT_EQ(p.index->log_index, 0);
    if (!p.on_divisor) EXPECT_TRUE(p.components.empty());
  }
}

TEST(P2Solver, CrossingPointHasNoGsv) {
  const auto inv = enumerate_singularities(fields::worked_p2(), {parse("z2", 2), parse("z0", 2)});
  const auto it = std::find_if(inv.points.begin(), inv.points.end(),
                               [](const SingularPoint& p) { return p.components.size() == 2; });
  ASSERT_NE(it, inv.points.end());
  EXPECT_LT(projective_distance(it->coords, {0.0, 1.0, 0.0}), 1e-12);
  EXPECT_FALSE(it->index->gsv.has_value());
}

TEST(P2Solver, PredictionOnWorkedExample) {
  const auto check = verify_theorem3_p2(fields::worked_p2(), {parse("z2", 2), parse("z0", 2)});
  EXPECT_EQ(check.empirical, 2);
  EXPECT_EQ(check.predicted, 2);
  EXPECT_TRUE(check.agrees());
}

TEST(P2Solver, TranslationField) {
  const auto inv = enumerate_singularities(fields::translation(2), {parse("z1", 2)});
  ASSERT_EQ(inv.points.size(), 1u);
  EXPECT_TRUE(inv.points[0].on_divisor);
  EXPECT_EQ(inv.off_divisor, 0);
  EXPECT_EQ(verify_theorem3_p2(fields::translation(2), {parse("z1", 2), parse("z2", 2)}).predicted, 0);
}

TEST(P2Solver, DegenerateFieldIsFlagged) {
  const HomogeneousVectorField v({parse("0", 2), parse("z1^2", 2), parse("z2^2", 2)});
  const auto inv = enumerate_singularities(v, {});
  EXPECT_FALSE(inv.certified());
  EXPECT_FALSE(inv.warnings.empty());
  EXPECT_THROW(verify_theorem3_p2(v, {}), InconclusiveError);
}

TEST(P2Solver, NonIsolatedSingularities) {
  const HomogeneousVectorField v({parse("z1^2", 2), parse("z0*z1", 2), parse("0", 2)});
  EXPECT_THROW(enumerate_singularities(v, {}), CommonFactorError);
}

TEST(P2Solver, NonInvariantDivisorRejected) {
  EXPECT_THROW(enumerate_singularities(fields::worked_p2(), {parse("z1", 2)}), PreconditionError);
}

TEST(P2Solver, ProjectiveDistance) {
  EXPECT_NEAR(projective_distance({1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}), 0, 1e-15);
  EXPECT_GT(projective_distance({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}), 0.5);
}

TEST(P2SolverProperty, BaumBottTotal) {
  std::mt19937 rng(10);
  for (int d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto inv = certified_inventory([&] { return gen::random_field(rng, d); }, {});
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(inv->total_with_multiplicity, d * d + d + 1);
    }
  }
}

TEST(P2SolverProperty, ChartOrderDoesNotMatter) {
  std::mt19937 rng(11);
  const std::array<std::array<std::size_t, 3>, 3> orders{{{2, 1, 0}, {1, 2, 0}, {0, 2, 1}}};
  for (int trial = 0; trial < 6; ++trial) {
    const auto comps = gen::random_field(rng, 2);
    std::optional<HomogeneousVectorField> v;
    try {
      v.emplace(comps);
    } catch (const foliation::InvalidFoliation&) {
      continue;
    }
    const auto base = enumerate_singularities(*v, {});
    if (!base.certified()) continue;
    for (const auto& order : orders) {
      SolverOptions opts;
      opts.chart_order = order;
      const auto other = enumerate_singularities(*v, {}, opts);
      EXPECT_EQ(other.total_with_multiplicity, base.total_with_multiplicity);
      for (const auto& p : base.points) EXPECT_TRUE(contains(other, p.coords, 1e-8));
    }
  }
}

TEST(P2SolverProperty, InvariantLineLaw) {
  std::mt19937 rng(12);
  for (int d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::vector<int> w = trial % 2 ? std::vector<int>{1, 0, 0} : std::vector<int>{1, 1, 1};
      const auto line = gen::linear_form(w);
      const auto inv = certified_inventory([&] { return gen::field_with_invariant_line(rng, d, w); }, {line});
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(inv->on_divisor, d + 1);
      EXPECT_EQ(inv->off_divisor, d * d);
      EXPECT_EQ(inv->off_divisor, counts::count_outside_ncd(2, {1}, d));
    }
  }
}

TEST(P2SolverProperty, StrictProfileAgrees) {
  SolverOptions strict;
  strict.tol = Tolerances::strict_profile();
  const auto a = enumerate_singularities(fields::worked_p2(), {parse("z2", 2), parse("z0", 2)});
  const auto b = enumerate_singularities(fields::worked_p2(), {parse("z2", 2), parse("z0", 2)}, strict);
  EXPECT_EQ(a.total_with_multiplicity, b.total_with_multiplicity);
  EXPECT_EQ(a.off_divisor, b.off_divisor);
}
