#include "fibra/expr.hpp"

#include <cctype>

namespace fibra {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  FieldPtr K;

  explicit Parser(const std::string& text, FieldPtr k) : s(text), K(std::move(k)) {}

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string& msg) {
    fail(ErrCode::ParseError, msg + " at position " + std::to_string(i) + " in \"" + s + "\"");
  }

  mpz_class read_integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) err("expected integer");
    return mpz_class(s.substr(start, i - start));
  }

  // number := int ('/' int)?   (rational literal)
  BiPoly parse_number() {
    mpz_class num = read_integer();
    if (accept('/')) {
      mpz_class den = read_integer();
      if (den == 0) err("zero denominator in rational literal");
      Rat r(num, den);
      r.canonicalize();
      return BiPoly::constant(FE::of(K, r));
    }
    return BiPoly::constant(FE::of(K, Rat(num)));
  }

  bool starts_primary() {
    char c = peek();
    return c == '(' || c == 'x' || c == 'y' || c == 't' || std::isdigit((unsigned char)c);
  }

  BiPoly parse_primary() {
    char c = peek();
    if (c == '(') {
      ++i;
      BiPoly e = parse_expr();
      if (!accept(')')) err("expected ')'");
      return e;
    }
    if (c == 'x') {
      ++i;
      return BiPoly::var_x(K);
    }
    if (c == 'y') {
      ++i;
      return BiPoly::var_y(K);
    }
    if (c == 't') {
      ++i;
      return BiPoly::constant(FE::gen(K));
    }
    if (std::isdigit((unsigned char)c)) return parse_number();
    err("expected a primary expression");
  }

  // factor := primary ('^' int)?
  BiPoly parse_factor() {
    BiPoly base = parse_primary();
    if (accept('^')) {
      mpz_class e = read_integer();
      if (e < 0 || e > 64) err("unsupported exponent");
      unsigned long n = e.get_ui();
      BiPoly acc = BiPoly::constant(FE::one(K));
      for (unsigned long k = 0; k < n; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  // term := ('-')* factor (('*' factor) | factor)*   with juxtaposition
  BiPoly parse_term() {
    BiPoly acc = parse_factor();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (starts_primary()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly parse_expr() {
    // leading sign
    BiPoly acc(K);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    BiPoly t0 = parse_term();
    acc = neg ? -t0 : t0;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++i;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly parse_top() {
    BiPoly lhs = parse_expr();
    if (accept('=')) {
      BiPoly rhs = parse_expr();
      if (!eof()) err("unexpected trailing input");
      if (peek() == '=') err("multiple '=' signs");
      return lhs - rhs;
    }
    if (!eof()) err("unexpected trailing input");
    return lhs;
  }
};

}  // namespace

BiPoly parse_affine_expr(const std::string& text, const FieldPtr& K) {
  Parser p(text, K);
  return p.parse_top();
}

}  // namespace fibra
