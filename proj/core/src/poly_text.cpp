#include "logres/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "logres/error.hpp"

namespace logres::text {

using poly::Polynomial;
using poly::Rational;

VariableNames VariableNames::homogeneous(int n) {
  VariableNames v;
  for (int i = 0; i <= n; ++i) v.names.push_back("z" + std::to_string(i));
  return v;
}

VariableNames VariableNames::affine_plane() { return VariableNames{{"x", "y"}}; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail_unexpected();
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else {
        check_no_juxtaposition();
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek('^')) {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("exponent must be a nonnegative integer literal", pos_);
      }
      const std::size_t start = pos_;
      const mpz_class e = integer_literal();
      if (e > 1000) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(vars_.size(), Rational(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto it = std::find(vars_.names.begin(), vars_.names.end(), name);
      if (it == vars_.names.end()) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
      return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.names.begin()));
    }
    fail_unexpected();
  }

  mpz_class integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // After a complete factor the next token must be an operator, ')' or the end.
  void check_no_juxtaposition() {
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
      throw ParseError("implicit multiplication is not allowed", pos_);
    }
  }

  [[noreturn]] void fail_unexpected() const {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const VariableNames& vars_;
  std::size_t pos_ = 0;
};

unsigned degree_of(const poly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& vars) {
  return Parser(text, vars).parse();
}

std::string to_text(const Polynomial& p, const VariableNames& vars) {
  if (p.nvars() != vars.size()) throw PreconditionError("variable names do not match the polynomial");
  if (p.is_zero()) return "0";

  std::vector<const Polynomial::TermMap::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const unsigned da = degree_of(a->first);
    const unsigned db = degree_of(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [exps, c] = *t;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    const bool is_const = degree_of(exps) == 0;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) os << '*';
      os << vars.names[i];
      if (exps[i] > 1) os << '^' << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace logres::text
