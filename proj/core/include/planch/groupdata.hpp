#pragma once

#include <vector>

#include "planch/qfactored.hpp"
#include "planch/qratio.hpp"

namespace planch {

// Block sizes of a standard Levi subgroup of GL(n); blocks in the order the
// segments carry them.
struct LeviShape {
  std::vector<int> blocks;

  LeviShape() = default;
  explicit LeviShape(std::vector<int> b);
  int total() const;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// |GL(n, F_q)| as a polynomial in q; the empty group has order 1.
// Results are memoized behind an internal lock, as is poincare_poly.
QHalfPoly gl_order(int n);
// Same order in factored form: q^{n(n-1)/2} * prod_{j=1..n} (q^j - 1).
QFactored gl_order_factored(int n);

// Poincare polynomial of the symmetric group S_n: sum over w of X^{l(w)},
// returned as a polynomial in q. Equals prod_{i=1..n} (q^i - 1)/(q - 1).
QHalfPoly poincare_poly(int n);
// P_{S_n}(q^{-1}) in factored form.
QFactored poincare_inverse_factored(int n);

// Gamma factor of GL(n) relative to the Levi of the given shape, computed
// from finite group orders: q^{-2 sum_{i<j} n_i n_j} |GL(n,q)| / prod |GL(n_i,q)|.
QRatio gamma_factor(const LeviShape& shape);
QFactored gamma_factor_factored(const LeviShape& shape);
// Independent derivation through Poincare polynomials evaluated at q^{-1}:
// P_{S_n}(q^{-1}) / prod_i P_{S_{n_i}}(q^{-1}). The two routes must agree;
// keeping both exposed lets the verification layer prove it.
QRatio gamma_factor_poincare(const LeviShape& shape);

// The c-function constant of the same relative datum:
// prod_{i<j} P_{S_{n_i+n_j}}(q^{-1}) / (P_{S_n}(q^{-1}) prod_i P_{S_{n_i}}(q^{-1})^{k-2}).
// Defined as 1 when the shape has a single block.
QRatio c_function(const LeviShape& shape);
QFactored c_function_factored(const LeviShape& shape);

// Volume of the Iwahori subgroup when the maximal compact has volume 1:
// 1 / P_{S_n}(q).
QRatio iwahori_volume(int n);

}  // namespace planch
