#include "planch/expr_parse.hpp"

#include <cctype>

namespace planch {

namespace {

struct Parser {
  std::string_view s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("scalar expression: " + what + " at position " + std::to_string(i));
  }

  BigInt integer() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return BigInt(std::string(s.substr(start, i - start)));
  }

  // integer, or '(' int ('/' int)? ')' with denominator 1 or 2
  HalfInt half_exponent() {
    if (peek() == '(') {
      eat('(');
      BigInt n = integer();
      long long num = n.convert_to<long long>();
      if (eat('/')) {
        BigInt d = integer();
        if (d == 2) {
          if (!eat(')')) fail("expected ')'");
          return HalfInt::from_twice(num);
        }
        if (d == 1) {
          if (!eat(')')) fail("expected ')'");
          return HalfInt(num);
        }
        fail("exponent denominators other than 2 are not representable");
      }
      if (!eat(')')) fail("expected ')'");
      return HalfInt(num);
    }
    return HalfInt(integer().convert_to<long long>());
  }

  QRatio expr() {
    QRatio acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  QRatio term() {
    QRatio acc = unary();
    for (;;) {
      if (eat('*'))
        acc = acc * unary();
      else if (eat('/'))
        acc = acc / unary();
      else
        return acc;
    }
  }

  QRatio unary() {
    if (eat('-')) return -unary();
    return power();
  }

  QRatio power() {
    skip();
    bool base_is_q = peek() == 'q';
    QRatio base = atom();
    if (!eat('^')) return base;
    HalfInt e = half_exponent();
    if (e.is_integer()) return base.pow(e.integer());
    if (!base_is_q) fail("half-integer exponents apply only to q");
    return QRatio::q_pow(e);
  }

  QRatio atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == 'q') {
      ++i;
      return QRatio::q_pow(HalfInt(1));
    }
    if (c == '(') {
      ++i;
      QRatio inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QRatio(BigRat(integer()));
    fail("unexpected character");
  }
};

}  // namespace

QRatio parse_scalar(std::string_view text) {
  Parser p{text};
  QRatio r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace planch
