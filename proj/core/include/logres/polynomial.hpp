#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace logres::poly {

using Rational = mpq_class;
using Exponents = std::vector<unsigned>;

// a + b i with rational parts; used to evaluate polynomials exactly at snapped points.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

class Polynomial {
 public:
  // Terms are kept in lexicographic order of exponent vectors; the last one leads.
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(const Exponents& exps) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  // Common degree of all terms; nullopt when inhomogeneous or zero.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  bool has_integer_coefficients() const;

  // Adds c * x^exps.
  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  // Sets x_var = value and removes that variable (nvars shrinks by one).
  Polynomial specialize(std::size_t var, const Rational& value) const;

  // Multivariate division by a single divisor in lex order. Because {divisor} is a
  // Groebner basis of its ideal, the remainder is zero iff divisor divides *this.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  bool is_divisible_by(const Polynomial& divisor) const;

  // Smallest positive integer s making s * (*this) integral, and the scaled polynomial.
  std::pair<mpz_class, Polynomial> clear_denominators() const;

  template <class T>
  T evaluate(std::span<const T> point) const;
  GaussianRational evaluate_exact(std::span<const GaussianRational> point) const;
  // sum |c| * prod |x_i|^{e_i}: the scale against which residuals are measured.
  long double evaluate_abs(std::span<const long double> moduli) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

namespace detail {
template <class T>
T from_rational(const Rational& q);
template <>
inline std::complex<double> from_rational(const Rational& q) {
  return {q.get_d(), 0.0};
}
template <>
inline std::complex<long double> from_rational(const Rational& q) {
  return {static_cast<long double>(q.get_num().get_d()) / static_cast<long double>(q.get_den().get_d()),
          0.0L};
}
template <>
inline double from_rational(const Rational& q) {
  return q.get_d();
}
}  // namespace detail

template <class T>
T Polynomial::evaluate(std::span<const T> point) const {
  T total{};
  for (const auto& [exps, c] : terms_) {
    T term = detail::from_rational<T>(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < exps[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

}  // namespace logres::poly
