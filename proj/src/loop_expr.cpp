#include <cctype>

#include "flagclean/error.hpp"
#include "flagclean/lexing.hpp"
#include "flagclean/loop_matrix.hpp"

namespace flagclean {

namespace {

class LoopExprParser {
 public:
  LoopExprParser(std::string_view text, const std::vector<std::string>& vars)
      : s_(text), vars_(vars) {}

  LaurentPoly parse_expr_only() {
    LaurentPoly e = expr();
    expect_end();
    return e;
  }

  LoopPolyMatrix parse_matrix_product() {
    LoopPolyMatrix m = matrix();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      m = m * matrix();
      skip_ws();
    }
    expect_end();
    return m;
  }

 private:
  LoopPolyMatrix matrix() {
    LoopPolyMatrix m;
    expect('[');
    for (int r = 0; r < 2; ++r) {
      if (r) expect(',');
      expect('[');
      m.entries[static_cast<std::size_t>(2 * r)] = expr();
      expect(',');
      m.entries[static_cast<std::size_t>(2 * r + 1)] = expr();
      expect(']');
    }
    expect(']');
    return m;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) return acc;
      const char op = peek();
      ++pos_;
      LaurentPoly rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '*' && peek() != '/')) return acc;
      // A '*' followed by '[' belongs to a matrix product.
      if (peek() == '*') {
        std::size_t look = pos_ + 1;
        while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
        if (look < s_.size() && s_[look] == '[') return acc;
      }
      const char op = peek();
      ++pos_;
      LaurentPoly rhs = unary();
      if (op == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_single_term()) fail("divisor must be a single term c*t^k");
        acc = acc * rhs.inverse_term();
      }
    }
  }

  LaurentPoly unary() {
    skip_ws();
    if (!at_end() && peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (!at_end() && peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    skip_ws();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (negative) {
      if (!base.is_single_term()) fail("negative power of a non-monomial");
      base = base.inverse_term();
    }
    LaurentPoly r = one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  LaurentPoly atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    if (peek() == '(') {
      ++pos_;
      LaurentPoly e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return LaurentPoly::constant(
          RatFunc::constant(vars_.size(), Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    const std::size_t len = lexing::identifier_length(s_, pos_);
    if (len == 0) fail("unexpected character '" + std::string(1, peek()) + "'");
    const std::string name(s_.substr(pos_, len));
    pos_ += len;
    if (name == "t") return LaurentPoly::monomial(RatFunc::constant(vars_.size(), 1), 1);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name)
        return LaurentPoly::constant(RatFunc(Polynomial::variable(vars_.size(), i)));
    fail("unknown variable '" + name + "'");
  }

  LaurentPoly one() const { return LaurentPoly::constant(RatFunc::constant(vars_.size(), 1)); }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() {
    skip_ws();
    if (!at_end()) fail("trailing input");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_loop_expr(std::string_view text, const std::vector<std::string>& vars) {
  return LoopExprParser(text, vars).parse_expr_only();
}

LoopPolyMatrix parse_loop_matrix(std::string_view text, const std::vector<std::string>& vars) {
  return LoopExprParser(text, vars).parse_matrix_product();
}

}  // namespace flagclean
