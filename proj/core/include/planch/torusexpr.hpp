#pragma once

#include <complex>
#include <span>
#include <vector>

#include "planch/qratio.hpp"

namespace planch {

// One factor (1 - z_j * z_i^{-1} * q^a)^e on a compact torus with
// coordinates z_0, z_1, ... ; i and j are coordinate indices, a is a
// half-integer power of q and e an integer exponent.
struct TorusFactor {
  int zi = 0;
  int zj = 0;
  HalfInt a;
  long long e = 1;

  friend bool operator==(const TorusFactor&, const TorusFactor&) = default;
  friend auto operator<=>(const TorusFactor& x, const TorusFactor& y) {
    return std::tie(x.zi, x.zj, x.a, x.e) <=> std::tie(y.zi, y.zj, y.a, y.e);
  }
};

// Scalar times a product of torus factors. Canonical form sorts factors by
// (zi, zj, a) and merges exponents, so structural equality coincides with
// multiset equality of factors.
//
// A squared modulus |1 - z_j z_i^{-1} q^a|^2 on the unit torus is the pair
// of factors (zi=i, zj=j, a) and (zi=j, zj=i, a): the conjugate of a
// unit-circle coordinate is its inverse. normalized() additionally rewrites
// every such mirror pair to a nonpositive q-exponent using
// |1 - w q^a|^2 = q^{2a} |1 - w q^{-a}|^2, folding the shift into the
// scalar; serialized output always uses that normal form.
class FactoredFn {
 public:
  FactoredFn() : scalar_(QRatio::one()) {}
  explicit FactoredFn(QRatio scalar) : scalar_(std::move(scalar)) {}
  FactoredFn(QRatio scalar, std::vector<TorusFactor> factors);

  const QRatio& scalar() const { return scalar_; }
  const std::vector<TorusFactor>& factors() const { return factors_; }

  void scale(const QRatio& s) { scalar_ *= s; }
  // Adds one factor (canonical form is restored).
  void push(TorusFactor f);
  // Adds the factor pair of |1 - z_j z_i^{-1} q^a|^{2e}.
  void push_abs_sq(int i, int j, HalfInt a, long long e = 1);

  friend FactoredFn operator*(const FactoredFn& x, const FactoredFn& y);
  FactoredFn& operator*=(const FactoredFn& y) { return *this = *this * y; }
  FactoredFn inverse() const;

  // Structural equality: equal scalars and equal factor multisets.
  friend bool operator==(const FactoredFn&, const FactoredFn&) = default;

  // Mirror pairs rewritten to q-exponents <= 0, shift folded into the scalar.
  FactoredFn normalized() const;

  int torus_dim() const;  // 1 + largest coordinate index, 0 when no factors

  // Evaluates at a real q > 1 and a point z of the unit torus.
  // DomainError when some |z_i| strays from 1 by more than 1e-12;
  // SingularityError when a negative-exponent factor has modulus < 1e-14.
  std::complex<double> eval(double q, std::span<const std::complex<double>> z) const;
  // eval() plus a check that the imaginary part is negligible.
  double eval_real(double q, std::span<const std::complex<double>> z) const;

  // Display form, e.g.
  //   "(q+1)/(q) * |1 - z2/z1|^2 / |1 - z2/z1 * q^(-1)|^2".
  // Coordinates print 1-based. Unpaired factors print raw as
  //   "(1 - z2/z1 * q^(a))^e".
  std::string str() const;

 private:
  void canonicalize();
  QRatio scalar_;
  std::vector<TorusFactor> factors_;
};

}  // namespace planch
