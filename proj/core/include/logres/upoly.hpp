#pragma once

// Dense univariate polynomials over Z, coefficients stored low to high.

#include <gmpxx.h>

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace logres::upoly {

using Integer = mpz_class;

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  UPoly(std::initializer_list<long> coeffs);
  static UPoly constant(const Integer& c);
  static UPoly monomial(const Integer& c, int power);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i, zero past the degree.
  Integer coeff(int i) const;
  const Integer& leading() const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const Integer& scalar);
  UPoly operator-() const;
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Integer& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  UPoly pow(unsigned e) const;
  UPoly derivative() const;
  Integer content() const;
  // Divided by the content, with a positive leading coefficient.
  UPoly primitive_part() const;

  Integer evaluate(const Integer& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Exact quotient a / b in Z[x]; throws PreconditionError when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const Integer& b);
// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
UPoly gcd(const UPoly& a, const UPoly& b);
// Yun's algorithm on the primitive part: pairs (factor, multiplicity), factors square-free,
// pairwise coprime, nonconstant.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

// Correct rounding is not guaranteed, but the top 64 bits are kept.
long double to_long_double(const Integer& x);

}  // namespace logres::upoly
