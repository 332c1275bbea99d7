#pragma once

// Chern classes of the logarithmic tangent bundle T_{P^n}(-log D) for smooth and
// normal-crossing divisors, computed along several independent routes, plus exact
// checkers for the residue identities they satisfy.

#include <string>
#include <vector>

#include "logres/chow.hpp"

namespace logres::logchern {

using chow::ChowClass;
using chow::Integer;
using chow::TotalChern;

// A normal-crossing divisor D_1 + ... + D_N in P^n, described by component degrees.
// Normal crossing is assumed, never checked.
struct Divisor {
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::string> labels;  // optional, empty or one per component

  // Throws PreconditionError on n < 1, N < 1, a degree < 1, or a label count mismatch.
  void validate() const;
  std::size_t size() const noexcept { return degrees.size(); }
  // D with its last component removed.
  Divisor without_last() const;
};

// c_l(T(-log D)) for a smooth degree-k hypersurface, l = 0..n, from the closed sum
// [sum_j C(n+1, l-j) (-k)^j] h^l.
std::vector<ChowClass> log_chern_smooth_closed(int n, int k);
// Same classes via c_{j+1} = C(n+1, j+1) h^{j+1} - c_j * (k h).
std::vector<ChowClass> log_chern_smooth_recursive(int n, int k);
// Collapses per-degree classes c_0..c_n into one total class.
TotalChern assemble_total(const std::vector<ChowClass>& graded);

// (1+h)^{n+1} * prod_m (1 + k_m h)^{-1}
TotalChern log_total_ncd(const Divisor& div);
// Literal multi-index sum for c(Omega^1(log D)), dualised to the tangent side.
TotalChern log_chern_ncd_multiindex(const Divisor& div);

// chi(P^n \ D) as the degree of c_n(T(-log D)).
Integer euler_complement(const Divisor& div);

struct IdentitySides {
  Integer lhs;
  Integer rhs;
  bool holds() const { return lhs == rhs; }
};

// int c_n(T(-log D) - L) against int c_n(T - L) - int_D c_{n-1}(T - [D] - L), L = O(a).
IdentitySides verify_smooth_residue_identity(int n, int k, const Integer& a);
// Removal of the last component D_N; needs N >= 2.
IdentitySides verify_component_removal(const Divisor& div, const Integer& a);

}  // namespace logres::logchern
