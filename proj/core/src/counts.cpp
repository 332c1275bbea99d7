#include "logres/counts.hpp"

#include <stdexcept>

#include "logres/error.hpp"
#include "logres/logchern.hpp"

namespace logres::counts {

namespace {

// 0^0 = 1, which GMP already follows.
Integer int_pow(const Integer& base, int e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

void CountParams::validate() const {
  if (k < 1) throw PreconditionError("divisor degree k must be >= 1");
  if (d < 0) throw PreconditionError("foliation degree d must be >= 0");
  if (n < 2) throw PreconditionError("projective dimension n must be >= 2");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::SomeOutside: return "SomeOutside";
    case Verdict::AllOnDivisor: return "AllOnDivisor";
    case Verdict::Infeasible: return "Infeasible";
  }
  return "?";
}

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::OddPositive: return "1a";
    case CaseLabel::OddZero: return "1b";
    case CaseLabel::OddNegative: return "1c";
    case CaseLabel::EvenPositive: return "2a";
    case CaseLabel::EvenZero: return "2b";
  }
  return "?";
}

Integer f_eval(const Integer& x, const Integer& y, int n) {
  if (n < 0) throw PreconditionError("f_eval needs n >= 0");
  Integer total = 0;
  for (int i = 0; i <= n; ++i) {
    const Integer yi = int_pow(y, i);
    for (int j = 0; j <= n - i; ++j) total += binomial(n + 1, n - i - j) * int_pow(x, j) * yi;
  }
  return total;
}

Integer delta_sum(const CountParams& p) {
  p.validate();
  return f_eval(Integer(-p.k), Integer(p.d - 1), p.n);
}

Integer delta_closed(const CountParams& p) {
  p.validate();
  const Integer denom = 1 - p.k - p.d;
  if (denom == 0) return delta_sum(p);
  const Integer numer = int_pow(Integer(1 - p.k), p.n + 1) - int_pow(Integer(p.d), p.n + 1);
  Integer q;
  mpz_divexact(q.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  return q;
}

Integer delta_alternating(const CountParams& p) {
  p.validate();
  Integer total = 0;
  for (int i = 0; i <= p.n; ++i) {
    Integer term = int_pow(Integer(p.k - 1), i) * int_pow(Integer(p.d), p.n - i);
    if (i % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Classification classify(const CountParams& p) {
  Integer count = delta_sum(p);
  if (p.n % 2 == 1) {
    if (count > 0) return {Verdict::SomeOutside, CaseLabel::OddPositive, count};
    if (count == 0) return {Verdict::AllOnDivisor, CaseLabel::OddZero, count};
    return {Verdict::Infeasible, CaseLabel::OddNegative, count};
  }
  if (count == 0) return {Verdict::AllOnDivisor, CaseLabel::EvenZero, count};
  if (count < 0) throw std::logic_error("negative singularity count in even dimension");
  return {Verdict::SomeOutside, CaseLabel::EvenPositive, count};
}

Integer count_outside_smooth(const CountParams& p) { return delta_sum(p); }

Integer count_outside_ncd(int n, const std::vector<int>& degrees, int d) {
  if (d < 0) throw PreconditionError("foliation degree d must be >= 0");
  const logchern::Divisor div{n, degrees, {}};
  // T_F = O(1 - d)
  return chow::top_chern_difference(logchern::log_total_ncd(div), Integer(1 - d),
                                    chow::Ambient::projective_space(n));
}

Integer baum_bott_total(int n, int d) {
  if (n < 1 || d < 0) throw PreconditionError("baum_bott_total needs n >= 1, d >= 0");
  Integer total = 0;
  for (int i = 0; i <= n; ++i) total += int_pow(Integer(d), i);
  return total;
}

}  // namespace logres::counts
