#include "planch/qhalfpoly.hpp"

#include <cmath>
#include <sstream>

namespace planch {

long long QHalfPoly::min_vexp() const {
  if (c_.empty()) throw InputError("zero polynomial has no exponents");
  return c_.begin()->first;
}

long long QHalfPoly::max_vexp() const {
  if (c_.empty()) throw InputError("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

bool QHalfPoly::only_even_exponents() const {
  for (const auto& [k, v] : c_)
    if (k % 2 != 0) return false;
  return true;
}

void QHalfPoly::add_term(const BigRat& coeff, long long vexp) {
  if (coeff == 0) return;
  auto it = c_.find(vexp);
  if (it == c_.end()) {
    c_[vexp] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) c_.erase(it);
}

QHalfPoly QHalfPoly::operator-() const {
  QHalfPoly r;
  for (const auto& [k, v] : c_) r.c_[k] = -v;
  return r;
}

QHalfPoly operator+(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r = a;
  for (const auto& [k, v] : b.c_) r.add_term(v, k);
  return r;
}

QHalfPoly operator-(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r = a;
  for (const auto& [k, v] : b.c_) r.add_term(-v, k);
  return r;
}

QHalfPoly operator*(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r;
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_) r.add_term(va * vb, ka + kb);
  return r;
}

QHalfPoly QHalfPoly::pow(unsigned long long e) const {
  QHalfPoly acc(BigRat(1)), b = *this;
  while (e) {
    if (e & 1) acc *= b;
    if (e >>= 1) b *= b;
  }
  return acc;
}

std::optional<QHalfPoly> QHalfPoly::divided_by(const QHalfPoly& d) const {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  if (is_zero()) return QHalfPoly();
  // Work on ordinary polynomials: shift both so the divisor starts at v^0,
  // the quotient absorbs the remaining shift.
  QHalfPoly rem = *this;
  long long shift = d.min_vexp();
  QHalfPoly quot;
  long long dlead = d.max_vexp();
  BigRat dcoeff = d.c_.rbegin()->second;
  while (!rem.is_zero() && rem.max_vexp() - rem.min_vexp() >= dlead - shift) {
    long long k = rem.max_vexp() - dlead;
    BigRat c = rem.c_.rbegin()->second / dcoeff;
    quot.add_term(c, k);
    for (const auto& [kd, vd] : d.c_) rem.add_term(-c * vd, kd + k);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

QHalfPoly QHalfPoly::substitute_q_pow(long long k) const {
  if (k < 1) throw InputError("substitution exponent must be positive");
  QHalfPoly r;
  for (const auto& [e, v] : c_) r.c_[e * k] = v;
  return r;
}

QHalfPoly QHalfPoly::reciprocal_variable() const {
  QHalfPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

double QHalfPoly::eval_at_q(double q) const {
  double v = std::sqrt(q);
  double acc = 0.0;
  for (const auto& [e, c] : c_) acc += rat_double(c) * std::pow(v, static_cast<double>(e));
  return acc;
}

BigRat QHalfPoly::leading_coeff() const {
  if (c_.empty()) return BigRat(0);
  return c_.rbegin()->second;
}

BigRat QHalfPoly::content() const {
  // gcd of numerators over lcm of denominators, always positive.
  if (c_.empty()) return BigRat(1);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : c_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  if (num_gcd == 0) num_gcd = 1;
  return BigRat(num_gcd, den_lcm);
}

std::string QHalfPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponents.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRat mag = c < 0 ? BigRat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string power;
    if (e == 2) {
      power = "q";
    } else if (e != 0) {
      if (e % 2 == 0 && e > 0) {
        power = "q^" + std::to_string(e / 2);
      } else {
        power = "q^(" + HalfInt::from_twice(e).str() + ")";
      }
    }
    if (power.empty()) {
      out << rat_str(mag);
    } else if (mag == 1) {
      out << power;
    } else {
      out << rat_str(mag) << "*" << power;
    }
  }
  return out.str();
}

namespace {

// Integer-coefficient view used by the primitive remainder sequence.
using ZPoly = std::map<long long, BigInt>;

ZPoly primitive_z(const QHalfPoly& p) {
  ZPoly z;
  BigRat cont = p.content();
  for (const auto& [e, c] : p.terms()) {
    BigRat red = c / cont;
    z[e - p.min_vexp()] = numerator(red);
  }
  return z;
}

void z_normalize(ZPoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0)
      it = p.erase(it);
    else
      ++it;
  }
  if (p.empty()) return;
  BigInt g = 0;
  for (const auto& [e, c] : p) g = boost::multiprecision::gcd(g, c);
  if (p.rbegin()->second < 0) g = -g;
  for (auto& [e, c] : p) c /= g;
  // Strip the v^k unit so gcds never pick up powers of the variable beyond
  // what both arguments share (callers pass shifted inputs).
  long long m = p.begin()->first;
  if (m != 0) {
    ZPoly shifted;
    for (const auto& [e, c] : p) shifted[e - m] = c;
    p = shifted;
  }
}

// Pseudo-remainder of a by b (deg a >= deg b), coefficients stay integral.
ZPoly z_prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  long long db = b.rbegin()->first;
  BigInt lb = b.rbegin()->second;
  while (!r.empty() && r.rbegin()->first >= db) {
    long long k = r.rbegin()->first - db;
    BigInt lr = r.rbegin()->second;
    ZPoly next;
    for (const auto& [e, c] : r) next[e] = c * lb;
    for (const auto& [e, c] : b) {
      auto& slot = next[e + k];
      slot -= c * lr;
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0)
        it = next.erase(it);
      else
        ++it;
    }
    r = next;
  }
  return r;
}

}  // namespace

QHalfPoly poly_gcd(QHalfPoly a, QHalfPoly b) {
  if (a.is_zero() && b.is_zero()) return QHalfPoly(BigRat(1));
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    ZPoly za = primitive_z(a);
    z_normalize(za);
    QHalfPoly g;
    for (const auto& [e, c] : za) g.add_term(BigRat(c), e);
    return g;
  }
  ZPoly za = primitive_z(a), zb = primitive_z(b);
  z_normalize(za);
  z_normalize(zb);
  if (za.rbegin()->first < zb.rbegin()->first) std::swap(za, zb);
  while (!zb.empty()) {
    ZPoly r = z_prem(za, zb);
    z_normalize(r);
    za = std::move(zb);
    zb = std::move(r);
  }
  QHalfPoly g;
  for (const auto& [e, c] : za) g.add_term(BigRat(c), e);
  return g;
}

}  // namespace planch
