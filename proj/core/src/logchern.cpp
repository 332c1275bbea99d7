#include "logres/logchern.hpp"

#include <functional>

#include "logres/error.hpp"

namespace logres::logchern {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer int_pow(const Integer& base, int e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

void require_smooth_params(int n, int k) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (k < 1) throw PreconditionError("divisor degree must be >= 1");
}

// prod_m (1 + k_m h)^{-1} on P^n
TotalChern inverse_components(int n, const std::vector<int>& degrees) {
  TotalChern acc = TotalChern::one(n);
  for (int k : degrees) acc = acc * chow::inverse_unit(chow::binomial_total(k, 1, n));
  return acc;
}

}  // namespace

void Divisor::validate() const {
  if (n < 1) throw PreconditionError("divisor ambient needs n >= 1");
  if (degrees.empty()) throw PreconditionError("divisor needs at least one component");
  for (int k : degrees) {
    if (k < 1) throw PreconditionError("component degrees must be >= 1");
  }
  if (!labels.empty() && labels.size() != degrees.size()) {
    throw PreconditionError("one label per component expected");
  }
}

Divisor Divisor::without_last() const {
  Divisor out{n, {degrees.begin(), degrees.end() - 1}, {}};
  if (!labels.empty()) out.labels.assign(labels.begin(), labels.end() - 1);
  return out;
}

std::vector<ChowClass> log_chern_smooth_closed(int n, int k) {
  require_smooth_params(n, k);
  std::vector<ChowClass> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    Integer coeff = 0;
    for (int j = 0; j <= l; ++j) coeff += binomial(n + 1, l - j) * int_pow(Integer(-k), j);
    out.push_back(ChowClass::h_power(n, l) * coeff);
  }
  return out;
}

std::vector<ChowClass> log_chern_smooth_recursive(int n, int k) {
  require_smooth_params(n, k);
  const ChowClass kh = ChowClass::h_power(n, 1) * Integer(k);
  std::vector<ChowClass> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(ChowClass::one(n));
  for (int j = 0; j < n; ++j) {
    out.push_back(ChowClass::h_power(n, j + 1) * binomial(n + 1, j + 1) - mul(out.back(), kh));
  }
  return out;
}

TotalChern assemble_total(const std::vector<ChowClass>& graded) {
  if (graded.empty()) throw PreconditionError("no graded pieces");
  ChowClass total(graded.front().dim());
  for (const auto& piece : graded) total += piece;
  return TotalChern(std::move(total));
}

TotalChern log_total_ncd(const Divisor& div) {
  div.validate();
  return chow::binomial_total(1, static_cast<unsigned>(div.n + 1), div.n) *
         inverse_components(div.n, div.degrees);
}

TotalChern log_chern_ncd_multiindex(const Divisor& div) {
  div.validate();
  const int n = div.n;
  const std::size_t N = div.degrees.size();
  // c(Omega^1_{P^n}) = (1 - h)^{n+1}
  const TotalChern omega = chow::binomial_total(-1, static_cast<unsigned>(n + 1), n);

  // inner[m] = sum over J = (j_1..j_N), |J| = m, of prod_r (k_r)^{j_r}
  std::vector<Integer> inner(static_cast<std::size_t>(n) + 1);
  std::vector<int> J(N, 0);
  std::function<void(std::size_t, int)> enumerate = [&](std::size_t slot, int remaining) {
    if (slot + 1 == N) {
      J[slot] = remaining;
      Integer term = 1;
      int total = 0;
      for (std::size_t r = 0; r < N; ++r) {
        term *= int_pow(Integer(div.degrees[r]), J[r]);
        total += J[r];
      }
      inner[static_cast<std::size_t>(total)] += term;
      return;
    }
    for (int j = 0; j <= remaining; ++j) {
      J[slot] = j;
      enumerate(slot + 1, remaining - j);
    }
  };
  for (int m = 0; m <= n; ++m) enumerate(0, m);

  std::vector<Integer> log_forms(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    for (int m = 0; m <= i; ++m) {
      log_forms[static_cast<std::size_t>(i)] += omega.c(i - m) * inner[static_cast<std::size_t>(m)];
    }
  }
  return chow::dual_total(TotalChern(ChowClass(n, std::move(log_forms))));
}

Integer euler_complement(const Divisor& div) {
  return chow::integrate(chow::Ambient::projective_space(div.n), log_total_ncd(div));
}

IdentitySides verify_smooth_residue_identity(int n, int k, const Integer& a) {
  if (n < 2) throw PreconditionError("smooth residue identity needs n >= 2");
  require_smooth_params(n, k);
  const auto pn = chow::Ambient::projective_space(n);

  IdentitySides out;
  out.lhs = chow::top_chern_difference(assemble_total(log_chern_smooth_closed(n, k)), a, pn);

  const TotalChern tangent = chow::binomial_total(1, static_cast<unsigned>(n + 1), n);
  const Integer on_space = chow::top_chern_difference(tangent, a, pn);
  // c(T_X - [D]) restricted to D
  const auto on_divisor = chow::restrict_to_hypersurface(
      tangent * chow::inverse_unit(chow::binomial_total(k, 1, n)), k);
  out.rhs = on_space - chow::top_chern_difference(on_divisor.value, a, on_divisor.ambient);
  return out;
}

IdentitySides verify_component_removal(const Divisor& div, const Integer& a) {
  div.validate();
  if (div.size() < 2) throw PreconditionError("component removal needs at least two components");
  const int n = div.n;
  const auto pn = chow::Ambient::projective_space(n);
  const int last = div.degrees.back();
  const Divisor kept = div.without_last();

  IdentitySides out;
  out.lhs = chow::top_chern_difference(log_total_ncd(div), a, pn);

  // c(T_{D_N}) = (1+h)^{n+1} / (1 + k_N h), then the log twist by the restricted D^_N.
  const TotalChern tangent_of_last =
      chow::binomial_total(1, static_cast<unsigned>(n + 1), n) *
      chow::inverse_unit(chow::binomial_total(last, 1, n));
  const auto on_last =
      chow::restrict_to_hypersurface(tangent_of_last * inverse_components(n, kept.degrees), last);
  out.rhs = chow::top_chern_difference(log_total_ncd(kept), a, pn) -
            chow::top_chern_difference(on_last.value, a, on_last.ambient);
  return out;
}

}  // namespace logres::logchern
