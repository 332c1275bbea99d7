#include "logres/chow.hpp"

#include <ostream>
#include <sstream>

#include "logres/error.hpp"

namespace logres::chow {

namespace {

void require_same_dim(const ChowClass& a, const ChowClass& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("Chow classes of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

ChowClass::ChowClass(int dim) : dim_(dim) {
  if (dim < 0) throw PreconditionError("negative Chow ring dimension");
  coeffs_.resize(static_cast<std::size_t>(dim) + 1);
}

ChowClass::ChowClass(int dim, std::vector<Integer> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
  if (dim < 0) throw PreconditionError("negative Chow ring dimension");
  if (coeffs_.size() != static_cast<std::size_t>(dim) + 1) {
    throw DimensionMismatch("expected " + std::to_string(dim + 1) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

ChowClass::ChowClass(int dim, std::initializer_list<long> coeffs)
    : ChowClass(dim, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

ChowClass ChowClass::one(int dim) {
  ChowClass c(dim);
  c.coeffs_[0] = 1;
  return c;
}

ChowClass ChowClass::h_power(int dim, int power) {
  ChowClass c(dim);
  if (power >= 0 && power <= dim) c.coeffs_[static_cast<std::size_t>(power)] = 1;
  return c;
}

bool ChowClass::is_zero() const {
  for (const auto& x : coeffs_) {
    if (x != 0) return false;
  }
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const Integer& scalar) {
  for (auto& x : coeffs_) x *= scalar;
  return *this;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
ChowClass operator*(ChowClass a, const Integer& scalar) { return a *= scalar; }

ChowClass mul(const ChowClass& a, const ChowClass& b) {
  require_same_dim(a, b);
  const int dim = a.dim();
  std::vector<Integer> out(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= dim; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return ChowClass(dim, std::move(out));
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const ChowClass& c) {
  bool first = true;
  for (int i = 0; i <= c.dim(); ++i) {
    const Integer& x = c[i];
    if (x == 0) continue;
    const bool negative = x < 0;
    const Integer mag = abs(x);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'h';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os;
}

TotalChern::TotalChern(ChowClass c) : value_(std::move(c)) {
  if (value_[0] != 1) throw PreconditionError("total Chern class must have constant term 1");
}

Integer TotalChern::c(int i) const {
  if (i < 0 || i > value_.dim()) return 0;
  return value_[i];
}

TotalChern operator*(const TotalChern& a, const TotalChern& b) {
  return TotalChern(mul(a.chow(), b.chow()));
}

TotalChern inverse_unit(const ChowClass& a) {
  if (a[0] != 1) throw PreconditionError("inverse_unit needs constant term 1, got " + a[0].get_str());
  const int dim = a.dim();
  std::vector<Integer> b(static_cast<std::size_t>(dim) + 1);
  b[0] = 1;
  // b_m = -sum_{i=1..m} a_i b_{m-i}
  for (int m = 1; m <= dim; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) acc += a[i] * b[static_cast<std::size_t>(m - i)];
    b[static_cast<std::size_t>(m)] = -acc;
  }
  return TotalChern(ChowClass(dim, std::move(b)));
}

TotalChern binomial_total(const Integer& a, unsigned m, int dim) {
  std::vector<Integer> out(static_cast<std::size_t>(dim) + 1);
  Integer binom = 1;
  Integer power = 1;
  for (int i = 0; i <= dim; ++i) {
    if (static_cast<unsigned>(i) > m) break;
    out[static_cast<std::size_t>(i)] = binom * power;
    binom = binom * (m - static_cast<unsigned>(i)) / (i + 1);
    power *= a;
  }
  return TotalChern(ChowClass(dim, std::move(out)));
}

TotalChern dual_total(const TotalChern& c) {
  std::vector<Integer> out(c.chow().coeffs().begin(), c.chow().coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return TotalChern(ChowClass(c.dim(), std::move(out)));
}

Ambient Ambient::projective_space(int n) {
  if (n < 1) throw PreconditionError("projective space needs n >= 1");
  return Ambient(Kind::ProjectiveSpace, n, 0);
}

Ambient Ambient::hypersurface(int n, int degree) {
  if (n < 1) throw PreconditionError("hypersurface needs an ambient P^n with n >= 1");
  if (degree < 1) throw PreconditionError("hypersurface degree must be >= 1");
  return Ambient(Kind::Hypersurface, n, degree);
}

Integer integrate(const Ambient& amb, const ChowClass& c) {
  if (c.dim() != amb.class_dim()) {
    throw DimensionMismatch("class of dimension " + std::to_string(c.dim()) +
                            " integrated over an ambient of dimension " +
                            std::to_string(amb.class_dim()));
  }
  if (amb.kind() == Ambient::Kind::ProjectiveSpace) return c[amb.n()];
  return Integer(amb.degree()) * c[amb.n() - 1];
}

Integer integrate(const RestrictedClass& c) { return integrate(c.ambient, c.value); }

RestrictedClass restrict_to_hypersurface(const ChowClass& c, int degree) {
  const int n = c.dim();
  if (n < 1) throw PreconditionError("cannot restrict a class on P^0");
  std::vector<Integer> out(c.coeffs().begin(), c.coeffs().end() - 1);
  return {Ambient::hypersurface(n, degree), ChowClass(n - 1, std::move(out))};
}

Integer top_chern_difference(const ChowClass& total, const Integer& a, const Ambient& amb) {
  const int dim = amb.class_dim();
  if (total.dim() != dim) throw DimensionMismatch("class does not live in the ambient ring");
  // c(E - O(a)) = c(E) / (1 + a h) = c(E) * sum_j (-a h)^j
  std::vector<Integer> series(static_cast<std::size_t>(dim) + 1);
  Integer power = 1;
  for (int j = 0; j <= dim; ++j) {
    series[static_cast<std::size_t>(j)] = power;
    power *= -a;
  }
  return integrate(amb, mul(total, ChowClass(dim, std::move(series))));
}

}  // namespace logres::chow
