#pragma once

// All complex roots of an integer polynomial, with multiplicities.

#include <complex>
#include <vector>

#include "logres/upoly.hpp"

namespace logres::roots {

using Complex = std::complex<long double>;

struct Root {
  Complex value;
  int multiplicity;
};

struct AberthOptions {
  double tolerance = 1e-14;  // relative correction at convergence
  int max_iterations = 200;
};

// Simultaneous Aberth-Ehrlich iteration started on the Cauchy-bound circle. The input
// should be square-free. Throws ConvergenceError with the per-sweep largest correction.
std::vector<Complex> aberth(const upoly::UPoly& p, const AberthOptions& opts = {});

// Square-free decomposition, then Aberth on every factor. The multiplicities sum to
// deg p. Output is sorted by (real, imag). Throws PreconditionError on p = 0.
std::vector<Root> complex_roots(const upoly::UPoly& p, const AberthOptions& opts = {});

// Positive root of |a_m| r^m = sum_{i<m} |a_i| r^i; every root has modulus <= it.
long double cauchy_bound(const upoly::UPoly& p);

}  // namespace logres::roots
