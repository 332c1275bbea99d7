#include "sweeps.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "logres/counts.hpp"
#include "logres/logchern.hpp"

namespace logres::cli {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

class Recorder {
 public:
  explicit Recorder(SweepResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.push_back(describe());
  }

 private:
  SweepResult& r_;
};

std::string degrees_text(const std::vector<int>& degrees) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ')';
  return os.str();
}

// Every tuple in [1, max_k]^N.
void for_each_tuple(std::size_t N, int max_k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(N, 1);
  for (;;) {
    f(t);
    std::size_t i = 0;
    while (i < N && t[i] == max_k) t[i++] = 1;
    if (i == N) return;
    ++t[i];
  }
}

SweepResult start(const std::string& suite, int max_n, int max_k, std::vector<std::string> paths) {
  SweepResult r;
  r.suite = suite;
  r.max_n = max_n;
  r.max_k = max_k;
  r.paths = std::move(paths);
  return r;
}

}  // namespace

SweepBounds default_bounds(const std::string& suite) {
  if (suite == "smooth") return {6, 5};
  if (suite == "ncd") return {5, 3};
  if (suite == "delta") return {9, 8};
  if (suite == "logchern") return {8, 6};
  throw std::invalid_argument("unknown suite " + suite);
}

bool is_known_suite(const std::string& suite) {
  return suite == "smooth" || suite == "ncd" || suite == "delta" || suite == "logchern";
}

SweepResult sweep_smooth(int max_n, int max_k) {
  auto r = start("smooth", max_n, max_k,
                 {"lhs: closed log Chern classes + top_chern_difference",
                  "rhs: integral over P^n minus integral over the hypersurface"});
  Recorder rec(r);
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      for (int a = -5; a <= 5; ++a) {
        const auto sides = logchern::verify_smooth_residue_identity(n, k, a);
        rec.check(sides.holds(), [&] {
          std::ostringstream os;
          os << "n=" << n << " k=" << k << " a=" << a << ": lhs " << sides.lhs << " != rhs " << sides.rhs;
          return os.str();
        });
      }
    }
  }
  return r;
}

SweepResult sweep_ncd(int max_n, int max_k) {
  auto r = start("ncd", max_n, max_k,
                 {"lhs: log_total_ncd + top_chern_difference",
                  "rhs: divisor without D_N minus the restricted term on D_N"});
  Recorder rec(r);
  for (int n = 1; n <= max_n; ++n) {
    for (std::size_t N = 2; N <= 4; ++N) {
      for_each_tuple(N, max_k, [&](const std::vector<int>& degrees) {
        const logchern::Divisor div{n, degrees, {}};
        for (int a = -3; a <= 3; ++a) {
          const auto sides = logchern::verify_component_removal(div, a);
          rec.check(sides.holds(), [&] {
            std::ostringstream os;
            os << "n=" << n << " degrees=" << degrees_text(degrees) << " a=" << a << ": lhs " << sides.lhs
               << " != rhs " << sides.rhs;
            return os.str();
          });
          // Reordering the retained components must not change either side.
          std::vector<int> kept(degrees.begin(), degrees.end() - 1);
          std::sort(kept.begin(), kept.end());
          do {
            std::vector<int> permuted = kept;
            permuted.push_back(degrees.back());
            const auto other = logchern::verify_component_removal({n, permuted, {}}, a);
            rec.check(other.lhs == sides.lhs && other.rhs == sides.rhs, [&] {
              return "order dependence: n=" + std::to_string(n) + " " + degrees_text(degrees) + " vs " +
                     degrees_text(permuted) + " a=" + std::to_string(a);
            });
          } while (std::next_permutation(kept.begin(), kept.end()));
        }
      });
    }
  }
  return r;
}

SweepResult sweep_delta(int max_n, int max_k) {
  auto r = start("delta", max_n, max_k, {"delta_sum", "delta_closed", "delta_alternating"});
  Recorder rec(r);
  for (int k = 1; k <= max_k; ++k) {
    for (int d = 0; d <= max_k; ++d) {
      for (int n = 2; n <= max_n; ++n) {
        const counts::CountParams p{k, d, n};
        const auto s = counts::delta_sum(p);
        const auto c = counts::delta_closed(p);
        const auto a = counts::delta_alternating(p);
        const std::string where = "k=" + std::to_string(k) + " d=" + std::to_string(d) + " n=" + std::to_string(n);
        rec.check(s == c && c == a, [&] {
          return where + ": sum " + s.get_str() + ", closed " + c.get_str() + ", alternating " + a.get_str();
        });
        bool sign_ok;
        if (n % 2 == 1) {
          sign_ok = sgn(s) == (k < d + 1 ? 1 : (k == d + 1 ? 0 : -1));
        } else {
          sign_ok = s >= 0 && ((s == 0) == (k == 1 && d == 0));
        }
        rec.check(sign_ok, [&] { return where + ": sign law violated by " + s.get_str(); });
      }
    }
  }
  return r;
}

SweepResult sweep_logchern(int max_n, int max_k) {
  auto r = start("logchern", max_n, max_k,
                 {"closed sum", "recursion", "series product", "multi-index enumeration"});
  Recorder rec(r);
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      const auto closed = logchern::assemble_total(logchern::log_chern_smooth_closed(n, k));
      const auto recursive = logchern::assemble_total(logchern::log_chern_smooth_recursive(n, k));
      const logchern::Divisor div{n, {k}, {}};
      const auto product = logchern::log_total_ncd(div);
      const auto multi = logchern::log_chern_ncd_multiindex(div);
      rec.check(closed == recursive && recursive == product && product == multi, [&] {
        return "smooth n=" + std::to_string(n) + " k=" + std::to_string(k) + ": closed " + closed.chow().to_string() +
               ", recursive " + recursive.chow().to_string() + ", product " + product.chow().to_string() +
               ", multi-index " + multi.chow().to_string();
      });
    }
    for (std::size_t N = 1; N <= 3; ++N) {
      for_each_tuple(N, max_k, [&](const std::vector<int>& degrees) {
        const logchern::Divisor div{n, degrees, {}};
        const auto product = logchern::log_total_ncd(div);
        const auto multi = logchern::log_chern_ncd_multiindex(div);
        int sum = 0;
        for (int k : degrees) sum += k;
        rec.check(product == multi && product.c(1) == n + 1 - sum, [&] {
          return "ncd n=" + std::to_string(n) + " degrees=" + degrees_text(degrees) + ": product " +
                 product.chow().to_string() + ", multi-index " + multi.chow().to_string();
        });
      });
    }
  }
  return r;
}

SweepResult run_sweep(const std::string& suite, int max_n, int max_k) {
  if (suite == "smooth") return sweep_smooth(max_n, max_k);
  if (suite == "ncd") return sweep_ncd(max_n, max_k);
  if (suite == "delta") return sweep_delta(max_n, max_k);
  if (suite == "logchern") return sweep_logchern(max_n, max_k);
  throw std::invalid_argument("unknown suite " + suite);
}

}  // namespace logres::cli
