#include "logres/p2solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logres/counts.hpp"
#include "logres/error.hpp"
#include "logres/resultant.hpp"
#include "logres/roots.hpp"

namespace logres::p2 {

namespace {

using cplx = std::complex<long double>;
using Point3 = std::array<cplx, 3>;

// One chart's affine system g_0 = g_1 = 0 with its Jacobian entries.
struct ChartSystem {
  std::size_t chart = 0;
  std::array<Polynomial, 2> g;
  std::array<std::array<Polynomial, 2>, 2> jac;
};

ChartSystem make_chart(const HomogeneousVectorField& v, std::size_t chart) {
  auto polys = foliation::affine_chart(v, chart);
  ChartSystem s;
  s.chart = chart;
  for (std::size_t r = 0; r < 2; ++r) {
    s.g[r] = polys[r].clear_denominators().second;
    for (std::size_t c = 0; c < 2; ++c) s.jac[r][c] = s.g[r].derivative(c);
  }
  return s;
}

double scaled_residual(const ChartSystem& s, const std::array<cplx, 2>& x) {
  const std::array<long double, 2> m{std::abs(x[0]), std::abs(x[1])};
  long double worst = 0;
  for (const auto& g : s.g) {
    const long double scale = g.evaluate_abs(m);
    if (scale == 0) continue;
    worst = std::max(worst, std::abs(g.evaluate<cplx>(x)) / scale);
  }
  return static_cast<double>(worst);
}

// Newton on the 2x2 system until the relative step drops below the target.
std::array<cplx, 2> newton(const ChartSystem& s, std::array<cplx, 2> x, const Tolerances& tol) {
  for (int it = 0; it < tol.max_newton_iterations; ++it) {
    const cplx f0 = s.g[0].evaluate<cplx>(x);
    const cplx f1 = s.g[1].evaluate<cplx>(x);
    const cplx a = s.jac[0][0].evaluate<cplx>(x);
    const cplx b = s.jac[0][1].evaluate<cplx>(x);
    const cplx c = s.jac[1][0].evaluate<cplx>(x);
    const cplx d = s.jac[1][1].evaluate<cplx>(x);
    const cplx det = a * d - b * c;
    if (std::abs(det) == 0) break;
    const cplx dx = (d * f0 - b * f1) / det;
    const cplx dy = (a * f1 - c * f0) / det;
    if (!std::isfinite(std::abs(dx)) || !std::isfinite(std::abs(dy))) break;
    x[0] -= dx;
    x[1] -= dy;
    const long double size = std::max({1.0L, std::abs(x[0]), std::abs(x[1])});
    if (std::max(std::abs(dx), std::abs(dy)) <= tol.newton_target * size) break;
  }
  return x;
}

Point3 lift(std::size_t chart, const std::array<cplx, 2>& x) {
  Point3 p;
  for (std::size_t j = 0, k = 0; j < 3; ++j) p[j] = (j == chart) ? cplx(1) : x[k++];
  return p;
}

std::array<cplx, 2> project(std::size_t chart, const Point3& p) {
  std::array<cplx, 2> x;
  for (std::size_t j = 0, k = 0; j < 3; ++j) {
    if (j != chart) x[k++] = p[j] / p[chart];
  }
  return x;
}

// First index whose modulus is within a hair of the maximum; near ties resolve to the
// lower index deterministically.
std::size_t pivot_index(const Point3& p) {
  long double best = 0;
  for (const auto& c : p) best = std::max(best, std::abs(c));
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(p[i]) >= best * (1 - 1e-6L)) return i;
  }
  return 0;
}

struct Candidate {
  Point3 point;
  std::size_t chart;
  double residual;
  int multiplicity_estimate;
};

// Best rational approximation with denominator <= height by continued fractions.
std::optional<mpq_class> snap(long double x, long height, double distance) {
  const bool negative = x < 0;
  long double r = std::fabs(x);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rest = r;
  for (int it = 0; it < 64; ++it) {
    const long double a_ld = std::floor(rest);
    if (a_ld > static_cast<long double>(height)) break;
    const long a = static_cast<long>(a_ld);
    const long h2 = a * h1 + h0;
    const long k2 = a * k1 + k0;
    if (k2 > height || h2 > height) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const long double frac = rest - a_ld;
    if (std::fabs(r - static_cast<long double>(h1) / k1) <= distance * 1e-3L || frac == 0) break;
    rest = 1 / frac;
  }
  if (k1 == 0) return std::nullopt;
  if (std::fabs(r - static_cast<long double>(h1) / k1) > distance) return std::nullopt;
  mpq_class q(negative ? -h1 : h1, k1);
  q.canonicalize();
  return q;
}

std::optional<std::array<poly::GaussianRational, 3>> snap_point(const std::array<std::complex<double>, 3>& p,
                                                               const Tolerances& tol) {
  std::array<poly::GaussianRational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    auto re = snap(p[i].real(), tol.snap_height, tol.snap_distance);
    auto im = snap(p[i].imag(), tol.snap_height, tol.snap_distance);
    if (!re || !im) return std::nullopt;
    out[i] = {*re, *im};
  }
  return out;
}

// v(p) parallel to p, decided exactly.
bool exactly_singular(const HomogeneousVectorField& v, const std::array<poly::GaussianRational, 3>& p) {
  std::array<poly::GaussianRational, 3> vp;
  for (std::size_t i = 0; i < 3; ++i) vp[i] = v[i].evaluate_exact(p);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(p[i] * vp[j] - p[j] * vp[i]).is_zero()) return false;
    }
  }
  return true;
}

std::string format_tolerance(const char* field, double value) {
  std::ostringstream os;
  os << field << '=' << value;
  return os.str();
}

bool point_less(const SingularPoint& a, const SingularPoint& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
    if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
  }
  return false;
}

}  // namespace

double projective_distance(const std::array<std::complex<double>, 3>& p,
                           const std::array<std::complex<double>, 3>& q) {
  double np = 0, nq = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    np += std::norm(p[i]);
    nq += std::norm(q[i]);
  }
  const double scale = std::sqrt(np * nq);
  if (scale == 0) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) worst = std::max(worst, std::abs(p[i] * q[j] - p[j] * q[i]));
  }
  return worst / scale;
}

SingularityInventory enumerate_singularities(const HomogeneousVectorField& v,
                                             const std::vector<Polynomial>& divisor,
                                             const SolverOptions& opts) {
  if (v.n() != 2) throw PreconditionError("the singularity solver works on P^2 only");
  const Tolerances& tol = opts.tol;
  for (const auto& f : divisor) {
    if (f.nvars() != 3) throw PreconditionError("divisor component is not over z0, z1, z2");
    if (!foliation::is_invariant(v, f)) throw PreconditionError("divisor component is not invariant");
  }
  {
    auto order = opts.chart_order;
    std::sort(order.begin(), order.end());
    if (order != std::array<std::size_t, 3>{0, 1, 2}) throw PreconditionError("chart order must permute 0, 1, 2");
  }

  std::array<ChartSystem, 3> systems;
  for (std::size_t c = 0; c < 3; ++c) systems[c] = make_chart(v, c);

  const roots::AberthOptions root_opts{tol.root_convergence, tol.max_root_iterations};
  std::vector<Candidate> candidates;
  for (std::size_t chart : opts.chart_order) {
    const ChartSystem& s = systems[chart];
    const Polynomial& p = s.g[0];
    const Polynomial& q = s.g[1];
    if ((p.is_constant() && !p.is_zero()) || (q.is_constant() && !q.is_zero())) continue;
    if (p.is_zero() || q.is_zero()) {
      throw CommonFactorError("chart " + std::to_string(chart) + " system has a curve of zeros");
    }
    const auto res_first = elim::sylvester_resultant(p, q, 1);   // in the first affine variable
    const auto res_second = elim::sylvester_resultant(p, q, 0);  // in the second
    if (res_first.is_constant() || res_second.is_constant()) continue;
    const auto xs = roots::complex_roots(res_first, root_opts);
    const auto ys = roots::complex_roots(res_second, root_opts);

    for (const auto& rx : xs) {
      for (const auto& ry : ys) {
        std::array<cplx, 2> x{rx.value, ry.value};
        if (scaled_residual(s, x) > tol.candidate_filter) continue;
        x = newton(s, x, tol);
        if (scaled_residual(s, x) > tol.residual) continue;

        // Re-polish in the chart where the point's largest coordinate is 1.
        Point3 hp = lift(chart, x);
        const std::size_t best = pivot_index(hp);
        std::size_t used = chart;
        if (best != chart) {
          auto y = newton(systems[best], project(best, hp), tol);
          if (scaled_residual(systems[best], y) <= tol.residual) {
            hp = lift(best, y);
            used = best;
          }
        }
        const double residual = scaled_residual(systems[used], project(used, hp));
        const int mult = std::min(rx.multiplicity, ry.multiplicity);
        candidates.push_back({hp, used, residual, mult});
      }
    }
  }

  SingularityInventory inv;
  inv.degree = v.degree();

  std::vector<Candidate> merged;
  for (const auto& cand : candidates) {
    std::array<std::complex<double>, 3> pd;
    const std::size_t piv = pivot_index(cand.point);
    for (std::size_t i = 0; i < 3; ++i) {
      const cplx z = cand.point[i] / cand.point[piv];
      pd[i] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
    bool duplicate = false;
    for (auto& m : merged) {
      std::array<std::complex<double>, 3> md;
      for (std::size_t i = 0; i < 3; ++i) md[i] = {static_cast<double>(m.point[i].real()), static_cast<double>(m.point[i].imag())};
      if (projective_distance(pd, md) <= tol.merge) {
        duplicate = true;
        if (cand.residual < m.residual) m = cand;
        break;
      }
    }
    if (!duplicate) merged.push_back(cand);
  }

  for (const auto& m : merged) {
    SingularPoint sp;
    const std::size_t piv = pivot_index(m.point);
    for (std::size_t i = 0; i < 3; ++i) {
      const cplx z = m.point[i] / m.point[piv];
      sp.coords[i] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
    sp.coords[piv] = 1.0;
    sp.chart = piv;
    sp.residual = scaled_residual(systems[piv], project(piv, m.point));
    sp.jacobian_ratio = foliation::jacobian_ratio(v, sp.coords, piv);
    sp.nondegenerate = sp.jacobian_ratio > tol.degeneracy;
    sp.nondegeneracy_decided_by = format_tolerance("degeneracy", tol.degeneracy);

    const auto snapped = snap_point(sp.coords, tol);
    sp.exact = snapped && exactly_singular(v, *snapped);
    const std::array<long double, 3> moduli{std::abs(m.point[0] / m.point[piv]), std::abs(m.point[1] / m.point[piv]),
                                            std::abs(m.point[2] / m.point[piv])};
    Point3 normalized;
    for (std::size_t i = 0; i < 3; ++i) normalized[i] = m.point[i] / m.point[piv];
    for (std::size_t c = 0; c < divisor.size(); ++c) {
      bool on;
      if (sp.exact) {
        on = divisor[c].evaluate_exact(*snapped).is_zero();
      } else {
        const long double scale = divisor[c].evaluate_abs(moduli);
        on = std::abs(divisor[c].evaluate<cplx>(normalized)) <= tol.on_divisor * scale;
      }
      if (on) sp.components.push_back(c);
    }
    sp.on_divisor = !sp.components.empty();
    sp.divisor_decided_by = sp.exact ? "exact" : format_tolerance("on_divisor", tol.on_divisor);

    if (sp.nondegenerate) {
      std::optional<Polynomial> local;
      for (std::size_t c : sp.components) local = local ? *local * divisor[c] : divisor[c];
      sp.index = foliation::index_report(v, local ? &*local : nullptr, sp.coords, piv, tol);
      sp.multiplicity = sp.index->milnor;
    } else {
      sp.multiplicity = std::max(1, m.multiplicity_estimate);
      inv.degenerate_flagged = true;
      std::ostringstream os;
      os << "degenerate singularity near (" << sp.coords[0] << " : " << sp.coords[1] << " : " << sp.coords[2]
         << "), Jacobian ratio " << sp.jacobian_ratio << "; multiplicity estimated, not certified";
      inv.warnings.push_back(os.str());
    }
    inv.points.push_back(std::move(sp));
  }

  std::sort(inv.points.begin(), inv.points.end(), point_less);
  for (const auto& sp : inv.points) {
    inv.total_with_multiplicity += sp.multiplicity;
    (sp.on_divisor ? inv.on_divisor : inv.off_divisor) += sp.multiplicity;
  }
  return inv;
}

Theorem3Check verify_theorem3_p2(const HomogeneousVectorField& v, const std::vector<Polynomial>& divisor,
                                 const std::vector<int>& degrees, const SolverOptions& opts) {
  if (degrees.size() != divisor.size()) throw PreconditionError("one degree per divisor component expected");
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    const auto d = divisor[i].homogeneous_degree();
    if (!d || *d != degrees[i]) throw PreconditionError("divisor degree does not match component " + std::to_string(i));
  }
  const auto inv = enumerate_singularities(v, divisor, opts);
  if (!inv.certified()) throw InconclusiveError("inventory contains degenerate singularities");
  Theorem3Check out;
  out.empirical = inv.off_divisor;
  out.predicted = divisor.empty() ? counts::baum_bott_total(2, v.degree())
                                  : counts::count_outside_ncd(2, degrees, v.degree());
  return out;
}

Theorem3Check verify_theorem3_p2(const HomogeneousVectorField& v, const std::vector<Polynomial>& divisor,
                                 const SolverOptions& opts) {
  std::vector<int> degrees;
  for (const auto& f : divisor) {
    const auto d = f.homogeneous_degree();
    if (!d) throw PreconditionError("divisor component is not homogeneous");
    degrees.push_back(*d);
  }
  return verify_theorem3_p2(v, divisor, degrees, opts);
}

}  // namespace logres::p2
