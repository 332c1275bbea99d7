#include "logres/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logres/error.hpp"

namespace logres::roots {

using upoly::UPoly;

long double cauchy_bound(const UPoly& p) {
  const int m = p.degree();
  if (m < 1) return 0;
  std::vector<long double> mag(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) mag[static_cast<std::size_t>(i)] = std::fabs(upoly::to_long_double(p.coeff(i)));
  // g(r) = |a_m| r^m - sum_{i<m} |a_i| r^i is negative below the bound, positive above.
  auto g = [&](long double r) {
    long double acc = mag[static_cast<std::size_t>(m)];
    for (int i = m - 1; i >= 0; --i) acc = acc * r - mag[static_cast<std::size_t>(i)];
    return acc;
  };
  long double hi = 1;
  while (g(hi) <= 0) hi *= 2;
  long double lo = 0;
  for (int it = 0; it < 200 && hi - lo > 1e-12L * hi; ++it) {
    const long double mid = 0.5L * (lo + hi);
    (g(mid) <= 0 ? lo : hi) = mid;
  }
  return hi;
}

std::vector<Complex> aberth(const UPoly& p, const AberthOptions& opts) {
  const int m = p.degree();
  if (m < 1) return {};
  if (m == 1) {
    return {Complex(-upoly::to_long_double(p.coeff(0)) / upoly::to_long_double(p.coeff(1)), 0)};
  }
  const UPoly dp = p.derivative();

  const long double radius = cauchy_bound(p);
  std::vector<Complex> z(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const long double theta = 2 * std::numbers::pi_v<long double> * j / m + 0.7L;
    z[static_cast<std::size_t>(j)] = std::polar(radius, theta);
  }

  std::vector<bool> done(z.size(), false);
  std::vector<double> trace;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const Complex pv = p.evaluate(z[i]);
      if (pv == Complex(0)) {
        done[i] = true;
        continue;
      }
      const Complex ratio = pv / dp.evaluate(z[i]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const Complex w = ratio / (1.0L - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      const long double rel = std::abs(w) / std::max(std::abs(z[i]), 1e-300L);
      worst = std::max(worst, rel);
      if (rel <= opts.tolerance) done[i] = true;
    }
    trace.push_back(static_cast<double>(worst));
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return z;
  }
  throw ConvergenceError("Aberth iteration did not converge in " + std::to_string(opts.max_iterations) +
                             " sweeps (degree " + std::to_string(m) + ")",
                         std::move(trace));
}

std::vector<Root> complex_roots(const UPoly& p, const AberthOptions& opts) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no finite root set");
  std::vector<Root> out;
  for (const auto& [factor, multiplicity] : upoly::squarefree_decomposition(p)) {
    UPoly f = factor;
    // Square-free, so x divides at most once; peel it off exactly.
    if (f.coeff(0) == 0) {
      out.push_back({Complex(0), multiplicity});
      std::vector<upoly::Integer> shifted(f.coeffs().begin() + 1, f.coeffs().end());
      f = UPoly(std::move(shifted));
    }
    for (const auto& z : aberth(f, opts)) out.push_back({z, multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace logres::roots
