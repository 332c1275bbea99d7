#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "logres/error.hpp"
#include "logres/poly_text.hpp"
#include "logres/resultant.hpp"
#include "logres/roots.hpp"
#include "logres/upoly.hpp"

using namespace logres;
using namespace logres::upoly;

namespace {

UPoly from_roots(const std::vector<long>& roots, long lead = 1) {
  UPoly p = UPoly::constant(lead);
  for (long r : roots) p = p * UPoly{-r, 1};
  return p;
}

UPoly random_upoly(std::mt19937& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coef(rng));
  if (c.back() == 0) c.back() = 1;
  return UPoly(c);
}

}  // namespace

TEST(UPoly, Basics) {
  const UPoly p{1, 2, 3};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(UPoly{}.degree(), -1);
  EXPECT_EQ((UPoly{1, 1} * UPoly{-1, 1}), (UPoly{-1, 0, 1}));
  EXPECT_EQ(p.derivative(), (UPoly{2, 6}));
  EXPECT_EQ(p.evaluate(Integer(2)), 17);
  EXPECT_EQ((UPoly{4, 6, 2}).content(), 2);
  EXPECT_EQ((UPoly{-4, -6, -2}).primitive_part(), (UPoly{2, 3, 1}));
  EXPECT_EQ((UPoly{1, 0, 0}), UPoly{1});
  EXPECT_EQ((UPoly{-1, 0, 1}).to_string("t"), "t^2 - 1");
}

TEST(UPoly, ExactDivisionAndGcd) {
  const auto a = from_roots({1, 2, 3});
  const auto b = from_roots({2, 3, 5});
  EXPECT_EQ(exact_div(a, from_roots({1})), from_roots({2, 3}));
  EXPECT_THROW(exact_div(a, from_roots({4})), PreconditionError);
  EXPECT_EQ(gcd(a, b), from_roots({2, 3}));
  EXPECT_EQ(gcd(a, from_roots({7})), UPoly{1});
}

TEST(UPoly, SquarefreeDecomposition) {
  const auto p = from_roots({1, 1, 1, 2, 2, 3}, 5);
  const auto parts = squarefree_decomposition(p);
  UPoly rebuilt{1};
  int total = 0;
  for (const auto& [f, m] : parts) {
    rebuilt = rebuilt * f.pow(static_cast<unsigned>(m));
    total += m * f.degree();
  }
  EXPECT_EQ(total, 6);
  EXPECT_EQ(rebuilt.primitive_part(), p.primitive_part());
}

TEST(Resultant, IntegerRootsProduct) {
  // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j)
  const std::vector<long> a{1, -2, 4};
  const std::vector<long> b{3, 0};
  Integer expected = 1;
  for (long x : a)
    for (long y : b) expected *= x - y;
  EXPECT_EQ(elim::resultant(from_roots(a), from_roots(b)), expected);
  EXPECT_EQ(elim::resultant_bareiss(from_roots(a), from_roots(b)), expected);
  EXPECT_EQ(elim::resultant(from_roots({1, 2}), from_roots({2})), 0);
}

TEST(Resultant, WorkedChartEliminant) {
  const auto xy = text::VariableNames::affine_plane();
  const auto p = text::parse_polynomial("x^2 - 1", xy);
  const auto q = text::parse_polynomial("y^2 - y", xy);
  // Eliminating x leaves (y^2 - y)^2.
  const auto r = elim::sylvester_resultant(p, q, 0);
  EXPECT_EQ(r, (UPoly{0, -1, 1}).pow(2));
}

TEST(Resultant, CommonFactorDetected) {
  const auto xy = text::VariableNames::affine_plane();
  const auto p = text::parse_polynomial("x*y - x", xy);
  const auto q = text::parse_polynomial("x^2 - x", xy);
  EXPECT_THROW(elim::sylvester_resultant(p, q, 0), CommonFactorError);
}

TEST(ResultantProperty, SubresultantMatchesBareiss) {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_upoly(rng, 1 + trial % 6, 20);
    const auto b = random_upoly(rng, 1 + (trial / 6) % 5, 20);
    EXPECT_EQ(elim::resultant(a, b), elim::resultant_bareiss(a, b)) << a.to_string() << " | " << b.to_string();
  }
}

TEST(ResultantProperty, BivariateRoutesAgree) {
  std::mt19937 rng(2002);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = gen::random_form(rng, 3, 1 + trial % 3, 6).specialize(0, 1);
    const auto q = gen::random_form(rng, 3, 1 + trial % 4, 6).specialize(0, 1);
    const auto bp = elim::to_bipoly(p, 0);
    const auto bq = elim::to_bipoly(q, 0);
    if (bp.size() < 2 || bq.size() < 2) continue;
    EXPECT_EQ(elim::resultant(bp, bq), elim::resultant_bareiss(bp, bq));
  }
}

TEST(Roots, CubicWithKnownRoots) {
  const auto roots = roots::complex_roots(from_roots({-3, 1, 2}));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(static_cast<double>(roots[0].value.real()), -3, 1e-14);
  EXPECT_NEAR(static_cast<double>(roots[1].value.real()), 1, 1e-14);
  EXPECT_NEAR(static_cast<double>(roots[2].value.real()), 2, 1e-14);
}

TEST(Roots, MultiplicitiesAndZeroRoot) {
  const auto roots = roots::complex_roots(from_roots({0, 0, 2, 2, 2}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].multiplicity, 2);
  EXPECT_EQ(roots[1].multiplicity, 3);
  EXPECT_THROW(roots::complex_roots(UPoly{}), PreconditionError);
}

TEST(Roots, ComplexPair) {
  const auto roots = roots::complex_roots(UPoly{1, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(static_cast<double>(std::abs(roots[0].value - roots::Complex(0, -1))), 0, 1e-14);
  EXPECT_NEAR(static_cast<double>(std::abs(roots[1].value - roots::Complex(0, 1))), 0, 1e-14);
}

TEST(Roots, NonConvergenceReportsTrace) {
  try {
    roots::aberth(from_roots({1, 2, 3, 4, 5, 6, 7}), {1e-30, 3});
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.trace().size(), 3u);
  }
}

TEST(RootsProperty, RandomIntegerRootsRecovered) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> root(-12, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> rs(1 + trial % 8);
    for (auto& r : rs) r = root(rng);
    const auto found = roots::complex_roots(from_roots(rs, 1 + trial % 3));
    int total = 0;
    for (const auto& r : found) {
      total += r.multiplicity;
      const long nearest = std::lround(static_cast<double>(r.value.real()));
      EXPECT_LT(std::abs(r.value - roots::Complex(nearest, 0)), 1e-10L);
      EXPECT_EQ(std::count(rs.begin(), rs.end(), nearest), r.multiplicity);
    }
    EXPECT_EQ(total, static_cast<int>(rs.size()));
  }
}

TEST(RootsProperty, CauchyBoundHolds) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const auto p = random_upoly(rng, 2 + trial % 9, 30);
    const auto bound = roots::cauchy_bound(p);
    for (const auto& r : roots::complex_roots(p)) EXPECT_LE(std::abs(r.value), bound * (1 + 1e-12L));
  }
}
