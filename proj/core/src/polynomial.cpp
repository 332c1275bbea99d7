#include "logres/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "logres/error.hpp"

namespace logres::poly {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw PreconditionError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [exps, c] : terms_) {
    best = std::max(best, static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u)));
  }
  return best;
}

int Polynomial::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [exps, c] : terms_) best = std::max(best, static_cast<int>(exps.at(var)));
  return best;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [exps, c] : terms_) {
    const int d = static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u));
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [exps, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw PreconditionError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw PreconditionError("polynomials over different variable counts (" + std::to_string(nvars_) +
                            " vs " + std::to_string(other.nvars_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw PreconditionError("derivative variable out of range");
  Polynomial out(nvars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] == 0) continue;
    Exponents e = exps;
    --e[var];
    out.add_term(e, c * exps[var]);
  }
  return out;
}

Polynomial Polynomial::specialize(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw PreconditionError("specialized variable out of range");
  Polynomial out(nvars_ - 1);
  Exponents e(nvars_ - 1);
  for (const auto& [exps, c] : terms_) {
    Rational factor = c;
    for (unsigned k = 0; k < exps[var]; ++k) factor *= value;
    for (std::size_t i = 0, j = 0; i < nvars_; ++i) {
      if (i != var) e[j++] = exps[i];
    }
    out.add_term(e, factor);
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [lead_exps, lead_coeff] = *divisor.terms_.rbegin();

  Polynomial quotient(nvars_);
  Polynomial remainder(nvars_);
  Polynomial work = *this;
  Exponents shift(nvars_);
  while (!work.is_zero()) {
    const auto [exps, c] = *work.terms_.rbegin();
    bool divisible = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps[i] < lead_exps[i]) {
        divisible = false;
        break;
      }
      shift[i] = exps[i] - lead_exps[i];
    }
    if (!divisible) {
      remainder.add_term(exps, c);
      work.terms_.erase(std::prev(work.terms_.end()));
      continue;
    }
    const Rational factor = c / lead_coeff;
    quotient.add_term(shift, factor);
    Exponents e(nvars_);
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = de[i] + shift[i];
      work.add_term(e, -factor * dc);
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divide(divisor);
  if (!r.is_zero()) return std::nullopt;
  return std::move(q);
}

bool Polynomial::is_divisible_by(const Polynomial& divisor) const {
  return divide(divisor).second.is_zero();
}

std::pair<mpz_class, Polynomial> Polynomial::clear_denominators() const {
  mpz_class scale = 1;
  for (const auto& [exps, c] : terms_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  return {scale, *this * Rational(scale)};
}

GaussianRational Polynomial::evaluate_exact(std::span<const GaussianRational> point) const {
  if (point.size() != nvars_) throw PreconditionError("point has the wrong dimension");
  GaussianRational total{0, 0};
  for (const auto& [exps, c] : terms_) {
    GaussianRational term{c, 0};
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < exps[i]; ++e) term = term * point[i];
    }
    total = total + term;
  }
  return total;
}

long double Polynomial::evaluate_abs(std::span<const long double> moduli) const {
  long double total = 0;
  for (const auto& [exps, c] : terms_) {
    long double term = std::fabs(static_cast<long double>(c.get_d()));
    for (std::size_t i = 0; i < nvars_; ++i) term *= std::pow(moduli[i], static_cast<long double>(exps[i]));
    total += term;
  }
  return total;
}

}  // namespace logres::poly
