#pragma once

// Exact arithmetic in the intersection ring Z[h]/(h^{n+1}) of P^n, and in the
// truncated ring Z[h]/(h^n) used for a degree-k hypersurface inside P^n.

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace logres::chow {

using Integer = mpz_class;

class ChowClass {
 public:
  // The zero class of the given dimension.
  explicit ChowClass(int dim);
  // coeffs[i] is the coefficient of h^i; the size must be exactly dim + 1.
  ChowClass(int dim, std::vector<Integer> coeffs);
  ChowClass(int dim, std::initializer_list<long> coeffs);

  static ChowClass one(int dim);
  // h^power (zero when power > dim).
  static ChowClass h_power(int dim, int power);

  int dim() const noexcept { return dim_; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Integer& scalar);

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string to_string() const;

 private:
  int dim_;
  std::vector<Integer> coeffs_;
};

ChowClass operator+(ChowClass a, const ChowClass& b);
ChowClass operator-(ChowClass a, const ChowClass& b);
ChowClass operator*(ChowClass a, const Integer& scalar);
// Truncated product; throws DimensionMismatch when the dimensions differ.
ChowClass mul(const ChowClass& a, const ChowClass& b);
ChowClass operator*(const ChowClass& a, const ChowClass& b);

std::ostream& operator<<(std::ostream& os, const ChowClass& c);

// A class with constant term exactly 1, read as 1 + c_1 h + c_2 h^2 + ...
class TotalChern {
 public:
  // Throws PreconditionError unless c[0] == 1.
  explicit TotalChern(ChowClass c);
  static TotalChern one(int dim) { return TotalChern(ChowClass::one(dim)); }

  const ChowClass& chow() const noexcept { return value_; }
  operator const ChowClass&() const noexcept { return value_; }  // NOLINT
  int dim() const noexcept { return value_.dim(); }
  // c_i; zero for i > dim.
  Integer c(int i) const;

  friend bool operator==(const TotalChern&, const TotalChern&) = default;

 private:
  ChowClass value_;
};

TotalChern operator*(const TotalChern& a, const TotalChern& b);

// Power-series inverse; throws PreconditionError unless the constant term is 1.
TotalChern inverse_unit(const ChowClass& a);
// Truncation of (1 + a h)^m to the given dimension.
TotalChern binomial_total(const Integer& a, unsigned m, int dim);
// Substitution h -> -h: c_i(E^*) = (-1)^i c_i(E).
TotalChern dual_total(const TotalChern& c);

// Integration context.
class Ambient {
 public:
  enum class Kind { ProjectiveSpace, Hypersurface };

  static Ambient projective_space(int n);
  static Ambient hypersurface(int n, int degree);

  Kind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  // Dimension of the truncated ring classes live in: n for P^n, n - 1 for a hypersurface.
  int class_dim() const noexcept { return kind_ == Kind::ProjectiveSpace ? n_ : n_ - 1; }

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  Ambient(Kind kind, int n, int degree) : kind_(kind), n_(n), degree_(degree) {}
  Kind kind_;
  int n_;
  int degree_;
};

// A class together with the ambient it was pulled back to.
struct RestrictedClass {
  Ambient ambient;
  ChowClass value;
};

// Degree of the zero-dimensional part: coeffs[n] on P^n, k * coeffs[n-1] on a
// degree-k hypersurface.
Integer integrate(const Ambient& amb, const ChowClass& c);
Integer integrate(const RestrictedClass& c);

// Pullback from P^n to a degree-k hypersurface: drops the h^n term.
RestrictedClass restrict_to_hypersurface(const ChowClass& c, int degree);

// Integral of c_top(E - L) with L = O(a): sum_j c_{top-j}(E) (-a)^j.
Integer top_chern_difference(const ChowClass& total, const Integer& a, const Ambient& amb);

}  // namespace logres::chow
