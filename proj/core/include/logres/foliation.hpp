#pragma once

// One-dimensional foliations on P^n given by homogeneous vector fields
// v = sum_i v_i d/dz_i, defined up to adding multiples of the radial field.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "logres/error.hpp"
#include "logres/polynomial.hpp"
#include "logres/tolerance.hpp"

namespace logres::foliation {

using poly::Polynomial;

class InvalidFoliation : public Error {
 public:
  using Error::Error;
};

// Checks the representation: n+1 components over n+1 variables, all homogeneous of
// one degree d (zero components allowed), not all zero, and not g * (z_0, ..., z_n).
// Returns d. Throws InvalidFoliation.
int validate(std::span<const Polynomial> components);

class HomogeneousVectorField {
 public:
  // Validates on construction.
  explicit HomogeneousVectorField(std::vector<Polynomial> components);

  int n() const noexcept { return static_cast<int>(components_.size()) - 1; }
  int degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }

 private:
  std::vector<Polynomial> components_;
  int degree_;
};

// sum_i v_i dF/dz_i
Polynomial derive_along(const HomogeneousVectorField& v, const Polynomial& f);
// F | v(F): the hypersurface {F = 0} is invariant.
bool is_invariant(const HomogeneousVectorField& v, const Polynomial& f);

// Restriction to the chart z_i = 1: the polynomials v_j - z_j v_i (j != i) in the
// remaining variables, ordered by increasing original index.
std::vector<Polynomial> affine_chart(const HomogeneousVectorField& v, std::size_t chart);

struct IndexReport {
  int milnor = 0;
  std::optional<int> gsv;  // defined only on a smooth point of an invariant divisor
  int log_index = 0;
  bool nondegenerate = false;
};

// Index bookkeeping at a numerically located singular point given in homogeneous
// coordinates. `divisor` is the local defining polynomial when the point lies on the
// divisor (a product of components at crossings), nullptr otherwise.
// Throws PreconditionError if the point is not a zero of the chart system within
// tol.residual, UnsupportedError if the singularity is degenerate.
IndexReport index_report(const HomogeneousVectorField& v, const Polynomial* divisor,
                         std::span<const std::complex<double>> point, std::size_t chart,
                         const Tolerances& tol = {});

// |det J| / (|row_1| ... |row_n|) of the chart system at the point (Hadamard ratio).
double jacobian_ratio(const HomogeneousVectorField& v, std::span<const std::complex<double>> point,
                      std::size_t chart);

}  // namespace logres::foliation
