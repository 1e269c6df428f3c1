#include <cctype>
#include <string>

#include "cyclofix/error.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

namespace {

// Recursive descent over
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := unary { ('*'|'/'|<juxtaposition>) unary }
//   unary   := ('+'|'-') unary | power
//   power   := primary [ '^' integer ]
//   primary := integer | 'x' | 'w{' integer '}' | '(' expr ')'
// Juxtaposition ("2x", "3(1+x)") multiplies when the next token is x, w or '('.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        RationalFunction divisor = unary();
        if (divisor.is_zero()) throw ZeroDenominator("division by zero at position " + std::to_string(at));
        value = value / divisor;
      } else if (c == 'x' || c == 'w' || c == '(') {
        value = value * unary();
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    if (peek() == '-') fail("negative exponents are not supported");
    const Integer e = integer();
    if (!e.fits_uint_p() || e > 100000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  RationalFunction primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction::constant(CycloNum(Rat(integer())));
    }
    if (c == 'x') {
      ++pos_;
      return RationalFunction::monomial(1);
    }
    if (c == 'w') {
      ++pos_;
      expect('{');
      const Integer r = integer();
      if (r < 1 || !r.fits_slong_p()) fail("root of unity order must be a positive integer");
      expect('}');
      return RationalFunction::constant(root_of_unity(r.get_si(), 1));
    }
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      expect(')');
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace cyclofix
