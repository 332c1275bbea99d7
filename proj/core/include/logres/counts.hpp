#pragma once

// Counting singularities of a foliation of degree d on P^n that lie outside an
// invariant hypersurface of degree k.

#include <string_view>
#include <vector>

#include "logres/chow.hpp"

namespace logres::counts {

using chow::Integer;

struct CountParams {
  int k = 1;  // divisor degree, >= 1
  int d = 0;  // foliation degree, >= 0
  int n = 2;  // projective dimension, >= 2

  // Throws PreconditionError when out of range.
  void validate() const;
};

enum class Verdict {
  SomeOutside,   // singularities exist off the divisor
  AllOnDivisor,  // every singularity lies on the divisor
  Infeasible,    // negative count: no foliation with these degrees has nondegenerate singularities
};

enum class CaseLabel { OddPositive, OddZero, OddNegative, EvenPositive, EvenZero };

struct Classification {
  Verdict verdict;
  CaseLabel case_label;
  Integer count;
};

std::string_view to_string(Verdict v);
// "1a", "1b", "1c", "2a", "2b"
std::string_view to_string(CaseLabel c);

// sum_{i=0}^{n} sum_{j=0}^{n-i} C(n+1, n-i-j) x^j y^i
Integer f_eval(const Integer& x, const Integer& y, int n);

// Literal double sum with x = -k, y = d - 1 (0^0 = 1). This is the reference form.
Integer delta_sum(const CountParams& p);
// ((1-k)^{n+1} - d^{n+1}) / (1 - k - d), falling back to delta_sum when 1 - k - d = 0.
Integer delta_closed(const CountParams& p);
// sum_i (-1)^i (k-1)^i d^{n-i}
Integer delta_alternating(const CountParams& p);

Classification classify(const CountParams& p);

// Singularities off a smooth invariant hypersurface (nondegenerate case).
Integer count_outside_smooth(const CountParams& p);
// Singularities off a normal-crossing invariant divisor with the given component degrees.
Integer count_outside_ncd(int n, const std::vector<int>& degrees, int d);
// Total number of singularities of a degree-d foliation on P^n: sum_i d^i.
Integer baum_bott_total(int n, int d);

}  // namespace logres::counts
