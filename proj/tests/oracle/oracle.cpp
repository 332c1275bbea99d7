#include "oracle.hpp"

namespace oracle {

Series one(int n) {
  Series s(static_cast<std::size_t>(n) + 1, 0);
  s[0] = 1;
  return s;
}

Series mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Int power(const Int& base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Series binomial_series(const Int& a, int m, int n) {
  Series s(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) s[j] = binomial(m, j) * power(a, j);
  return s;
}

Series geometric_inverse(const Int& a, int n) {
  Series s(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) s[j] = power(-a, j);
  return s;
}

Series log_tangent_total(int n, const std::vector<int>& degrees) {
  Series s = binomial_series(1, n + 1, n);
  for (int k : degrees) s = mul(s, geometric_inverse(k, n));
  return s;
}

Int twisted_top_count(int n, const std::vector<int>& degrees, int d) {
  const Series c = log_tangent_total(n, degrees);
  Int total = 0;
  for (int j = 0; j <= n; ++j) total += c[n - j] * power(d - 1, j);
  return total;
}

Int euler_complete_intersection(int n, const std::vector<int>& degrees) {
  // c(T_X) = (1+h)^{n+1} / prod (1 + k_i h), integrated against prod k_i h.
  const int r = static_cast<int>(degrees.size());
  if (r > n) return 0;
  Series c = log_tangent_total(n, degrees);
  Int prod = 1;
  for (int k : degrees) prod *= k;
  return prod * c[n - r];
}

Int euler_complement_inclusion_exclusion(int n, const std::vector<int>& degrees) {
  const std::size_t count = degrees.size();
  Int chi = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(degrees[i]);
    const Int term = subset.empty() ? Int(n + 1) : euler_complete_intersection(n, subset);
    chi += (subset.size() % 2 == 0) ? term : Int(-term);
  }
  return chi;
}

Int euler_smooth_hypersurface(int n, int k) {
  return (power(1 - k, n + 1) - 1) / k + n + 1;
}

Int f_double_sum(const Int& x, const Int& y, int n) {
  Int total = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) total += binomial(n + 1, n - i - j) * power(x, j) * power(y, i);
  return total;
}

Sides smooth_residue_sides(int n, int k, const Int& a) {
  // lhs: top class of T(-log D) - L; rhs: top of T - L minus the D-integral of
  // c_{n-1}(T_P|_D - [D] - L).
  const Series log_t = log_tangent_total(n, {k});
  const Series t = binomial_series(1, n + 1, n);
  auto top_minus = [&](const Series& c, int top) {
    Int s = 0;
    for (int j = 0; j <= top; ++j) s += c[top - j] * power(-a, j);
    return s;
  };
  Sides out;
  out.lhs = top_minus(log_t, n);
  const Series on_d = mul(t, geometric_inverse(k, n));
  out.rhs = top_minus(t, n) - k * top_minus(on_d, n - 1);
  return out;
}

std::string to_string(const Int& x) { return x.str(); }

}  // namespace oracle
