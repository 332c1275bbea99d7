#pragma once

// Complete enumeration of the singular points of a foliation on P^2: resultant
// elimination in each standard chart, roots of the eliminants, Newton polishing,
// and a merge across charts.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "logres/chow.hpp"
#include "logres/foliation.hpp"
#include "logres/tolerance.hpp"

namespace logres::p2 {

using foliation::HomogeneousVectorField;
using poly::Polynomial;

struct SingularPoint {
  // Homogeneous coordinates scaled so the first coordinate of (near) maximal modulus is 1.
  std::array<std::complex<double>, 3> coords{};
  std::size_t chart = 0;  // chart the point was polished in (its normalizing coordinate)
  int multiplicity = 1;   // 1 when nondegenerate; an eliminant-based estimate otherwise
  bool nondegenerate = false;
  bool on_divisor = false;
  std::vector<std::size_t> components;  // indices of divisor components through the point
  std::optional<foliation::IndexReport> index;
  double residual = 0;
  double jacobian_ratio = 0;
  bool exact = false;  // coordinates snapped to Gaussian rationals and verified exactly
  // Tolerance fields that decided the verdicts ("exact" when decided symbolically).
  std::string divisor_decided_by;
  std::string nondegeneracy_decided_by = "degeneracy";
};

struct SingularityInventory {
  int degree = 0;
  std::vector<SingularPoint> points;
  long total_with_multiplicity = 0;
  long off_divisor = 0;
  long on_divisor = 0;
  bool degenerate_flagged = false;
  std::vector<std::string> warnings;

  bool certified() const noexcept { return !degenerate_flagged; }
};

struct SolverOptions {
  Tolerances tol{};
  std::array<std::size_t, 3> chart_order{0, 1, 2};
};

// Every divisor component must be a nonzero homogeneous polynomial invariant by v.
// Throws CommonFactorError if a chart system has a common component (non-isolated
// singularities), PreconditionError on bad input.
SingularityInventory enumerate_singularities(const HomogeneousVectorField& v,
                                             const std::vector<Polynomial>& divisor,
                                             const SolverOptions& opts = {});

struct Theorem3Check {
  chow::Integer empirical;
  chow::Integer predicted;
  bool agrees() const { return empirical == predicted; }
};

// Off-divisor singularity count against the characteristic-class prediction.
// `degrees` must match the component degrees. Throws InconclusiveError when the
// inventory contains degenerate points.
Theorem3Check verify_theorem3_p2(const HomogeneousVectorField& v, const std::vector<Polynomial>& divisor,
                                 const std::vector<int>& degrees, const SolverOptions& opts = {});
Theorem3Check verify_theorem3_p2(const HomogeneousVectorField& v, const std::vector<Polynomial>& divisor,
                                 const SolverOptions& opts = {});

// Projective distance max_{i<j} |p_i q_j - p_j q_i| / (|p| |q|).
double projective_distance(const std::array<std::complex<double>, 3>& p,
                           const std::array<std::complex<double>, 3>& q);

}  // namespace logres::p2
