#include "logres/upoly.hpp"

#include <cmath>
#include <sstream>

#include "logres/error.hpp"

namespace logres::upoly {

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

UPoly UPoly::constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }

UPoly UPoly::monomial(const Integer& c, int power) {
  std::vector<Integer> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& UPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly out = constant(1);
  UPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(out));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return exact_div(*this, g);
}

Integer UPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> UPoly::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_long_double(*it);
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UPoly exact_div(const UPoly& a, const Integer& b) {
  if (b == 0) throw PreconditionError("division by zero");
  std::vector<Integer> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!mpz_divisible_p(a.coeffs()[i].get_mpz_t(), b.get_mpz_t())) {
      throw PreconditionError("inexact division by an integer");
    }
    mpz_divexact(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.get_mpz_t());
  }
  return UPoly(std::move(out));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PreconditionError("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw PreconditionError("inexact polynomial division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - b.degree();
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(shift + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(shift)] = q;
  }
  for (const auto& r : rem) {
    if (r != 0) throw PreconditionError("inexact polynomial division");
  }
  return UPoly(std::move(quot));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  UPoly r = a;
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const UPoly shifted = UPoly::monomial(r.leading(), r.degree() - b.degree()) * b;
    r = r * lb - shifted;
    --e;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return r * scale;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  UPoly x = a.primitive_part();
  UPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free decomposition of zero");
  std::vector<std::pair<UPoly, int>> out;
  const UPoly f = p.primitive_part();
  if (f.degree() <= 0) return out;
  const UPoly fp = f.derivative();
  const UPoly a0 = gcd(f, fp);
  UPoly b = exact_div(f, a0);
  UPoly c = exact_div(fp, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UPoly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

long double to_long_double(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long double>(x.get_si());
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  const std::size_t shift = bits - 64;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), shift);
  mpz_class mag = abs(top);
  // mag < 2^64: split into two 32-bit halves to stay portable.
  mpz_class hi, lo;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), mag.get_mpz_t(), 32);
  mpz_tdiv_r_2exp(lo.get_mpz_t(), mag.get_mpz_t(), 32);
  long double v = std::ldexp(static_cast<long double>(hi.get_ui()), 32) + static_cast<long double>(lo.get_ui());
  v = std::ldexp(v, static_cast<int>(shift));
  return top < 0 ? -v : v;
}

}  // namespace logres::upoly
