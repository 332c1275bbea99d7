#pragma once

// Reference implementations used only by the tests. They share no code with the
// library and run on boost::multiprecision instead of GMP.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
// Coefficients of 1, h, ..., h^n.
using Series = std::vector<Int>;

Series one(int n);
Series mul(const Series& a, const Series& b);
// (1 + a h)^m truncated at h^n.
Series binomial_series(const Int& a, int m, int n);
// 1 / (1 + a h) = sum_j (-a h)^j truncated at h^n.
Series geometric_inverse(const Int& a, int n);
Int power(const Int& base, int e);
Int binomial(int n, int k);

// (1+h)^{n+1} / prod (1 + k_i h)
Series log_tangent_total(int n, const std::vector<int>& degrees);

// Off-divisor count as the degree of c(T(-log D)) twisted by L = O(d - 1):
// sum_j c_{n-j} (d - 1)^j.
Int twisted_top_count(int n, const std::vector<int>& degrees, int d);

// Euler characteristic of a smooth complete intersection of the given degrees in P^n.
Int euler_complete_intersection(int n, const std::vector<int>& degrees);
// chi(P^n \ D) by inclusion-exclusion over the strata of a normal-crossing divisor.
Int euler_complement_inclusion_exclusion(int n, const std::vector<int>& degrees);
// Classical Euler characteristic of a smooth degree-k hypersurface in P^n.
Int euler_smooth_hypersurface(int n, int k);

// Brute-force double sum sum_{i,j} C(n+1, n-i-j) x^j y^i with 0^0 = 1.
Int f_double_sum(const Int& x, const Int& y, int n);

// Residue identity sides for a smooth degree-k hypersurface and L = O(a),
// computed straight from the series.
struct Sides {
  Int lhs;
  Int rhs;
};
Sides smooth_residue_sides(int n, int k, const Int& a);

std::string to_string(const Int& x);

}  // namespace oracle
