#include "logres/resultant.hpp"

#include "logres/error.hpp"

namespace logres::elim {

namespace {

// Minimal ring interface shared by Z and Z[t].
template <class R>
struct Ring;

template <>
struct Ring<Integer> {
  static Integer one() { return 1; }
  static bool is_zero(const Integer& x) { return x == 0; }
  static Integer div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static Integer pow(const Integer& a, int e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
  }
};

template <>
struct Ring<UPoly> {
  static UPoly one() { return UPoly::constant(1); }
  static bool is_zero(const UPoly& x) { return x.is_zero(); }
  static UPoly div(const UPoly& a, const UPoly& b) { return upoly::exact_div(a, b); }
  static UPoly pow(const UPoly& a, int e) { return a.pow(static_cast<unsigned>(e)); }
};

template <class R>
void trim(std::vector<R>& p) {
  while (!p.empty() && Ring<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const std::vector<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b) {
  const int db = deg(b);
  int e = deg(a) - db + 1;
  const R& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    const int shift = deg(a) - db;
    const R top = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] = a[static_cast<std::size_t>(shift + j)] - top * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  const R scale = Ring<R>::pow(lb, e);
  for (auto& c : a) c = c * scale;
  return a;
}

template <class R>
R subresultant(std::vector<R> a, std::vector<R> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return R{};
  bool negate = false;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = true;
  }
  auto signed_result = [&](R x) { return negate ? R{} - x : x; };
  if (deg(b) == 0) return signed_result(Ring<R>::pow(b.back(), deg(a)));

  R g = Ring<R>::one();
  R h = Ring<R>::one();
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = !negate;
    std::vector<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return R{};
    const R divisor = g * Ring<R>::pow(h, delta);
    for (auto& c : r) c = Ring<R>::div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = Ring<R>::div(Ring<R>::pow(g, delta), Ring<R>::pow(h, delta - 1));
    if (deg(b) == 0) break;
  }
  const int da = deg(a);
  return signed_result(Ring<R>::div(Ring<R>::pow(b.back(), da), Ring<R>::pow(h, da - 1)));
}

template <class R>
R bareiss_sylvester(std::vector<R> a, std::vector<R> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return R{};
  const int m = deg(a);
  const int n = deg(b);
  const int size = m + n;
  if (size == 0) return Ring<R>::one();
  std::vector<std::vector<R>> M(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = a[static_cast<std::size_t>(m - j)];
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = b[static_cast<std::size_t>(n - j)];
  }

  bool negate = false;
  R prev = Ring<R>::one();
  const auto N = static_cast<std::size_t>(size);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (Ring<R>::is_zero(M[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < N && Ring<R>::is_zero(M[swap_row][k])) ++swap_row;
      if (swap_row == N) return R{};
      std::swap(M[k], M[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        M[i][j] = Ring<R>::div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      }
    }
    prev = M[k][k];
  }
  R det = M[N - 1][N - 1];
  return negate ? R{} - det : det;
}

std::vector<Integer> as_vector(const UPoly& p) { return p.coeffs(); }

}  // namespace

Integer resultant(const UPoly& a, const UPoly& b) { return subresultant(as_vector(a), as_vector(b)); }
UPoly resultant(const BiPoly& a, const BiPoly& b) { return subresultant(a, b); }

Integer resultant_bareiss(const UPoly& a, const UPoly& b) { return bareiss_sylvester(as_vector(a), as_vector(b)); }
UPoly resultant_bareiss(const BiPoly& a, const BiPoly& b) { return bareiss_sylvester(a, b); }

BiPoly to_bipoly(const poly::Polynomial& p, std::size_t eliminate) {
  if (p.nvars() != 2) throw PreconditionError("expected a bivariate polynomial");
  if (eliminate > 1) throw PreconditionError("eliminated variable must be 0 or 1");
  if (!p.has_integer_coefficients()) throw PreconditionError("expected integer coefficients");
  const std::size_t other = 1 - eliminate;
  BiPoly out(static_cast<std::size_t>(std::max(p.degree_in(eliminate), 0)) + 1);
  for (const auto& [exps, c] : p.terms()) {
    out[exps[eliminate]] += UPoly::monomial(c.get_num(), static_cast<int>(exps[other]));
  }
  trim(out);
  return out;
}

UPoly sylvester_resultant(const poly::Polynomial& p, const poly::Polynomial& q, std::size_t eliminate) {
  if (p.is_zero() || q.is_zero()) throw CommonFactorError("resultant with the zero polynomial");
  const BiPoly a = to_bipoly(p, eliminate);
  const BiPoly b = to_bipoly(q, eliminate);
  if (deg(a) == 0 && deg(b) == 0) {
    if (upoly::gcd(a.front(), b.front()).degree() > 0) {
      throw CommonFactorError("polynomials share a factor free of the eliminated variable");
    }
    return UPoly::constant(1);
  }
  UPoly r = resultant(a, b);
  if (r.is_zero()) throw CommonFactorError("zero resultant: the polynomials share a common component");
  return r;
}

}  // namespace logres::elim
