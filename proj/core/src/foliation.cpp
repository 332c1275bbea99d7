#include "logres/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logres/error.hpp"

namespace logres::foliation {

namespace {

using cplx = std::complex<long double>;

std::vector<cplx> affine_point(std::span<const std::complex<double>> point, std::size_t chart) {
  if (chart >= point.size()) throw PreconditionError("chart index out of range");
  const cplx pivot(point[chart].real(), point[chart].imag());
  if (std::abs(pivot) == 0) throw PreconditionError("point lies outside the requested chart");
  std::vector<cplx> out;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j != chart) out.push_back(cplx(point[j].real(), point[j].imag()) / pivot);
  }
  return out;
}

std::vector<long double> moduli(const std::vector<cplx>& x) {
  std::vector<long double> out;
  for (const auto& c : x) out.push_back(std::abs(c));
  return out;
}

// Determinant by Gaussian elimination with partial pivoting.
cplx determinant(std::vector<std::vector<cplx>> m) {
  const std::size_t n = m.size();
  cplx det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) == 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

int validate(std::span<const Polynomial> components) {
  if (components.size() < 2) throw InvalidFoliation("a vector field on P^n needs n+1 >= 2 components");
  const std::size_t nvars = components.size();
  std::optional<int> degree;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Polynomial& c = components[i];
    if (c.nvars() != nvars) {
      throw InvalidFoliation("component " + std::to_string(i) + " is over " + std::to_string(c.nvars()) +
                             " variables, expected " + std::to_string(nvars));
    }
    if (c.is_zero()) continue;
    const auto d = c.homogeneous_degree();
    if (!d) throw InvalidFoliation("component " + std::to_string(i) + " is not homogeneous");
    if (degree && *degree != *d) {
      throw InvalidFoliation("components have mixed degrees " + std::to_string(*degree) + " and " +
                             std::to_string(*d));
    }
    degree = d;
  }
  if (!degree) throw InvalidFoliation("all components are zero");

  // v = g * (z_0, ..., z_n) forces every component to be nonzero.
  if (std::none_of(components.begin(), components.end(), [](const Polynomial& c) { return c.is_zero(); })) {
    const auto g = components[0].divide_exact(Polynomial::variable(nvars, 0));
    if (g) {
      bool radial = true;
      for (std::size_t i = 1; i < nvars && radial; ++i) {
        radial = (*g * Polynomial::variable(nvars, i)) == components[i];
      }
      if (radial) throw InvalidFoliation("vector field is a multiple of the radial field");
    }
  }
  return *degree;
}

HomogeneousVectorField::HomogeneousVectorField(std::vector<Polynomial> components)
    : components_(std::move(components)), degree_(validate(components_)) {}

Polynomial derive_along(const HomogeneousVectorField& v, const Polynomial& f) {
  if (f.nvars() != v.components().size()) throw PreconditionError("polynomial is over the wrong variables");
  Polynomial out(f.nvars());
  for (std::size_t i = 0; i < v.components().size(); ++i) out += v[i] * f.derivative(i);
  return out;
}

bool is_invariant(const HomogeneousVectorField& v, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial defines no hypersurface");
  if (!f.is_homogeneous()) throw PreconditionError("hypersurface equation must be homogeneous");
  return derive_along(v, f).is_divisible_by(f);
}

std::vector<Polynomial> affine_chart(const HomogeneousVectorField& v, std::size_t chart) {
  const std::size_t nvars = v.components().size();
  if (chart >= nvars) throw PreconditionError("chart index out of range");
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < nvars; ++j) {
    if (j == chart) continue;
    const Polynomial g = v[j] - Polynomial::variable(nvars, j) * v[chart];
    out.push_back(g.specialize(chart, 1));
  }
  return out;
}

double jacobian_ratio(const HomogeneousVectorField& v, std::span<const std::complex<double>> point,
                      std::size_t chart) {
  const auto system = affine_chart(v, chart);
  const auto x = affine_point(point, chart);
  const std::size_t n = system.size();
  std::vector<std::vector<cplx>> jac(n, std::vector<cplx>(n));
  long double row_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    long double norm2 = 0;
    for (std::size_t c = 0; c < n; ++c) {
      jac[r][c] = system[r].derivative(c).evaluate<cplx>(x);
      norm2 += std::norm(jac[r][c]);
    }
    row_product *= std::sqrt(norm2);
  }
  if (row_product == 0) return 0;
  return static_cast<double>(std::abs(determinant(std::move(jac))) / row_product);
}

IndexReport index_report(const HomogeneousVectorField& v, const Polynomial* divisor,
                         std::span<const std::complex<double>> point, std::size_t chart,
                         const Tolerances& tol) {
  if (point.size() != v.components().size()) throw PreconditionError("point has the wrong dimension");
  const auto system = affine_chart(v, chart);
  const auto x = affine_point(point, chart);
  const auto mx = moduli(x);
  for (const auto& g : system) {
    const long double scale = g.evaluate_abs(mx);
    if (scale == 0) continue;
    if (std::abs(g.evaluate<cplx>(x)) > tol.residual * scale) {
      throw PreconditionError("point is not a singularity within residual tolerance");
    }
  }

  const double ratio = jacobian_ratio(v, point, chart);
  if (ratio <= tol.degeneracy) {
    throw UnsupportedError("degenerate singularity (Jacobian ratio " + std::to_string(ratio) +
                           "); Milnor number not computed");
  }

  IndexReport report;
  report.nondegenerate = true;
  report.milnor = 1;
  report.log_index = 0;
  if (divisor != nullptr) {
    if (!is_invariant(v, *divisor)) throw PreconditionError("divisor is not invariant by the foliation");
    const Polynomial local = divisor->specialize(chart, 1);
    const long double value_scale = local.evaluate_abs(mx);
    if (value_scale > 0 && std::abs(local.evaluate<cplx>(x)) > tol.on_divisor * value_scale) {
      throw PreconditionError("point is not on the divisor");
    }
    long double grad = 0;
    long double grad_scale = 0;
    for (std::size_t i = 0; i < local.nvars(); ++i) {
      const Polynomial partial = local.derivative(i);
      grad += std::norm(partial.evaluate<cplx>(x));
      grad_scale += partial.evaluate_abs(mx);
    }
    // A nondegenerate zero restricted to a smooth invariant hypersurface stays
    // nondegenerate, so the GSV index equals 1 there.
    if (grad_scale > 0 && std::sqrt(grad) > tol.degeneracy * grad_scale) report.gsv = 1;
  }
  return report;
}

}  // namespace logres::foliation
