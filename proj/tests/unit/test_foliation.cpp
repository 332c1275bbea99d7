#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "fields.hpp"
#include "generators.hpp"
#include "logres/error.hpp"
#include "logres/foliation.hpp"

using namespace logres;
using namespace logres::foliation;
using fields::parse;

namespace {

using Point = std::vector<std::complex<double>>;

}  // namespace

TEST(Foliation, DegreeOfExampleFields) {
  EXPECT_EQ(fields::fermat_p3(3).degree(), 2);
  EXPECT_EQ(fields::translation(4).degree(), 0);
  EXPECT_EQ(fields::worked_p2().degree(), 2);
}

TEST(Foliation, RejectsBadRepresentatives) {
  EXPECT_THROW(HomogeneousVectorField({parse("z0", 1), parse("z1", 1)}), InvalidFoliation);
  EXPECT_THROW(HomogeneousVectorField({parse("z0*z1", 1), parse("z1^2", 1)}), InvalidFoliation);
  EXPECT_THROW(HomogeneousVectorField({parse("z0^2", 2), parse("z1", 2), parse("0", 2)}), InvalidFoliation);
  EXPECT_THROW(HomogeneousVectorField({parse("0", 2), parse("0", 2), parse("0", 2)}), InvalidFoliation);
  EXPECT_THROW(HomogeneousVectorField({parse("z0^2 + z1", 2), parse("z1^2", 2), parse("0", 2)}), InvalidFoliation);
  EXPECT_THROW(HomogeneousVectorField({parse("z0", 2), parse("z1", 2)}), InvalidFoliation);
}

TEST(Foliation, DeriveAlongExamples) {
  const auto t = fields::translation(3);
  EXPECT_TRUE(derive_along(t, parse("z1", 3)).is_zero());
  EXPECT_EQ(derive_along(t, parse("z0", 3)), Polynomial::constant(4, 1));
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(derive_along(fields::fermat_p3(k), fields::fermat(k)).is_zero()) << k;
}

TEST(Foliation, InvarianceExamples) {
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(is_invariant(fields::fermat_p3(k), fields::fermat(k)));
  for (int n = 2; n <= 5; ++n) {
    const auto t = fields::translation(n);
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(is_invariant(t, parse("z" + std::to_string(i), n)));
    EXPECT_FALSE(is_invariant(t, parse("z0", n)));
    EXPECT_TRUE(is_invariant(t, parse(n >= 2 ? "z1*z2" : "z1", n)));
  }
  const auto w = fields::worked_p2();
  EXPECT_TRUE(is_invariant(w, parse("z0", 2)));
  EXPECT_TRUE(is_invariant(w, parse("z2", 2)));
  EXPECT_TRUE(is_invariant(w, parse("z2 - z0", 2)));
  EXPECT_TRUE(is_invariant(w, parse("z1 - z0", 2)));
  EXPECT_FALSE(is_invariant(w, parse("z1", 2)));
  EXPECT_THROW(is_invariant(w, Polynomial(3)), PreconditionError);
}

TEST(Foliation, AffineChartOfWorkedField) {
  const auto chart = affine_chart(fields::worked_p2(), 0);
  const auto xy = text::VariableNames::affine_plane();
  ASSERT_EQ(chart.size(), 2u);
  EXPECT_EQ(chart[0], text::parse_polynomial("x^2 - 1", xy));
  EXPECT_EQ(chart[1], text::parse_polynomial("y^2 - y", xy));
}

TEST(Foliation, AffineChartOfTranslation) {
  const auto t = fields::translation(2);
  const auto xy = text::VariableNames::affine_plane();
  // Chart z0 = 1 keeps the singular point (1:0:0) at the origin.
  const auto c0 = affine_chart(t, 0);
  EXPECT_EQ(c0[0], text::parse_polynomial("-x", xy));
  EXPECT_EQ(c0[1], text::parse_polynomial("-y", xy));
  // Chart z1 = 1 has no zeros: the first equation is the constant 1.
  const auto c1 = affine_chart(t, 1);
  EXPECT_EQ(c1[0], text::parse_polynomial("1", xy));
}

TEST(Foliation, IndexReportOffDivisor) {
  const auto w = fields::worked_p2();
  for (double x : {1.0, -1.0}) {
    const Point p{1.0, x, 1.0};
    const auto r = index_report(w, nullptr, p, 0);
    EXPECT_TRUE(r.nondegenerate);
    EXPECT_EQ(r.milnor, 1);
    EXPECT_FALSE(r.gsv.has_value());
    EXPECT_EQ(r.log_index, 0);
  }
}

TEST(Foliation, IndexReportOnDivisor) {
  const auto w = fields::worked_p2();
  const auto d = parse("z2", 2);
  const Point p{1.0, 1.0, 0.0};
  const auto r = index_report(w, &d, p, 0);
  EXPECT_EQ(r.milnor, 1);
  EXPECT_EQ(r.gsv, 1);
  EXPECT_EQ(r.log_index, 0);
}

TEST(Foliation, IndexReportErrors) {
  const auto w = fields::worked_p2();
  const Point not_singular{1.0, 0.5, 1.0};
  EXPECT_THROW(index_report(w, nullptr, not_singular, 0), PreconditionError);
  const HomogeneousVectorField degenerate({parse("0", 2), parse("z1^2", 2), parse("z2^2", 2)});
  const Point origin{1.0, 0.0, 0.0};
  EXPECT_THROW(index_report(degenerate, nullptr, origin, 0), UnsupportedError);
  EXPECT_LT(jacobian_ratio(degenerate, origin, 0), 1e-9);
  EXPECT_NEAR(jacobian_ratio(w, Point{1.0, 1.0, 1.0}, 0), 1.0, 1e-12);
}

TEST(FoliationProperty, DeriveAlongIsADerivation) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = trial % 3;
    const auto comps = gen::random_field(rng, d, 5);
    std::optional<HomogeneousVectorField> v;
    try {
      v.emplace(comps);
    } catch (const InvalidFoliation&) {
      continue;
    }
    const auto f = gen::random_form(rng, 3, 2, 5);
    const auto g = gen::random_form(rng, 3, 2, 5);
    EXPECT_EQ(derive_along(*v, f + g), derive_along(*v, f) + derive_along(*v, g));
    EXPECT_EQ(derive_along(*v, f * g), derive_along(*v, f) * g + f * derive_along(*v, g));
  }
}

TEST(FoliationProperty, EulerIdentity) {
  // Adding the radial field to a linear field shifts v(F) by deg(F) F.
  std::mt19937 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const auto comps = gen::random_field(rng, 1, 5);
    auto shifted = comps;
    for (std::size_t i = 0; i < 3; ++i) shifted[i] += Polynomial::variable(3, i);
    std::optional<HomogeneousVectorField> v, w;
    try {
      v.emplace(comps);
      w.emplace(shifted);
    } catch (const InvalidFoliation&) {
      continue;
    }
    const int deg = 1 + trial % 5;
    const auto f = gen::random_form(rng, 3, deg, 7);
    EXPECT_EQ(derive_along(*w, f) - derive_along(*v, f), f * poly::Rational(deg));
  }
}

TEST(FoliationProperty, ProductsOfInvariantCurvesAreInvariant) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<int> w{1, 1 + trial % 3, -(trial % 4)};
    const auto v = HomogeneousVectorField(gen::field_with_invariant_line(rng, 1 + trial % 3, w, 5));
    const auto l = gen::linear_form({1, w[1], w[2]});
    EXPECT_TRUE(is_invariant(v, l));
    EXPECT_TRUE(is_invariant(v, l * l));
    EXPECT_TRUE(is_invariant(fields::worked_p2(), parse("z0*z2*(z2 - z0)*(z1 - z0)*(z1 + z0)", 2)));
  }
}
