#include "polydyn/parse.hpp"

#include <cctype>

namespace polydyn {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool digit() const {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  Int read_uint() {
    if (!digit()) fail("expected a digit");
    const std::size_t start = pos;
    while (digit()) ++pos;
    return Int(s.substr(start, pos - start));
  }

  // unsigned rational: digits, optionally /digits
  Rat read_urat() {
    Int num = read_uint();
    skip_ws();
    if (peek() == '/') {
      // "1/2" is a rational only when a denominator digit follows; otherwise
      // leave the slash for the caller to reject
      const std::size_t slash = pos;
      ++pos;
      skip_ws();
      if (!digit()) {
        pos = slash;
        return Rat(num);
      }
      const std::size_t den_at = pos;
      Int den = read_uint();
      if (den == 0) throw ParseError("denominator is zero", den_at);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (['*'] power)*        implicit '*' before 'x' or '('
// power  := primary ['^' uint]
// primary:= rational | 'x' | '(' expr ')' | '-' power
struct ExprParser {
  Scanner sc;

  RatPoly parse() {
    sc.skip_ws();
    if (sc.done()) sc.fail("empty input");
    RatPoly p = expr();
    sc.skip_ws();
    if (!sc.done()) sc.fail("trailing characters");
    return p;
  }

  RatPoly expr() {
    sc.skip_ws();
    bool neg = false;
    if (sc.peek() == '+' || sc.peek() == '-') {
      neg = sc.peek() == '-';
      ++sc.pos;
    }
    RatPoly p = term();
    if (neg) p = -p;
    while (true) {
      sc.skip_ws();
      if (sc.peek() == '+') {
        ++sc.pos;
        p += term();
      } else if (sc.peek() == '-') {
        ++sc.pos;
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }

  RatPoly term() {
    RatPoly p = power();
    while (true) {
      sc.skip_ws();
      if (sc.peek() == '*') {
        ++sc.pos;
        p *= power();
      } else if (sc.peek() == 'x' || sc.peek() == '(') {
        p *= power();
      } else {
        break;
      }
    }
    return p;
  }

  RatPoly power() {
    RatPoly p = primary();
    sc.skip_ws();
    if (sc.peek() != '^') return p;
    ++sc.pos;
    sc.skip_ws();
    const std::size_t at = sc.pos;
    Int e = sc.read_uint();
    if (!e.fits_ulong_p()) throw ParseError("exponent too large", at);
    const unsigned long eu = e.get_ui();
    if (p.degree() > 0 &&
        eu > kDefaultDegreeGuard / static_cast<unsigned long>(p.degree()))
      throw ParseError("exponent too large", at);
    return pow_poly(p, eu);
  }

  RatPoly primary() {
    sc.skip_ws();
    if (sc.digit()) return RatPoly(sc.read_urat());
    if (sc.peek() == 'x') {
      ++sc.pos;
      return RatPoly::x();
    }
    if (sc.peek() == '(') {
      ++sc.pos;
      RatPoly p = expr();
      sc.skip_ws();
      if (sc.peek() != ')') sc.fail("expected ')'");
      ++sc.pos;
      return p;
    }
    if (sc.peek() == '-') {
      ++sc.pos;
      return -power();
    }
    sc.fail("expected a number, 'x', or '('");
  }
};

RatPoly parse_coeff_list(const std::string& text) {
  std::vector<Rat> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    Scanner sc{piece};
    sc.skip_ws();
    if (sc.done()) throw ParseError("empty coefficient", pos + sc.pos);
    Rat sign(1);
    if (sc.peek() == '+' || sc.peek() == '-') {
      if (sc.peek() == '-') sign = Rat(-1);
      ++sc.pos;
      sc.skip_ws();
    }
    if (!sc.digit()) throw ParseError("expected a number", pos + sc.pos);
    Rat value = sign * sc.read_urat();
    sc.skip_ws();
    if (!sc.done()) throw ParseError("trailing characters", pos + sc.pos);
    coeffs.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return RatPoly(coeffs);
}

}  // namespace

RatPoly parse_poly(const std::string& text) {
  if (text.find('x') != std::string::npos || text.find('(') != std::string::npos)
    return ExprParser{Scanner{text}}.parse();
  if (text.find(',') != std::string::npos) return parse_coeff_list(text);
  // single number: constant polynomial
  return parse_coeff_list(text);
}

Rat parse_rat(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  if (sc.done()) sc.fail("empty input");
  Rat sign(1);
  if (sc.peek() == '+' || sc.peek() == '-') {
    if (sc.peek() == '-') sign = Rat(-1);
    ++sc.pos;
    sc.skip_ws();
  }
  if (!sc.digit()) sc.fail("expected a number");
  Rat value = sign * sc.read_urat();
  sc.skip_ws();
  if (!sc.done()) sc.fail("trailing characters");
  return value;
}

Int parse_int(const std::string& text) {
  Rat r = parse_rat(text);
  if (r.get_den() != 1) throw ParseError("expected an integer", 0);
  return r.get_num();
}

}  // namespace polydyn
