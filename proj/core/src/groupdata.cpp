#include "planch/groupdata.hpp"

#include <map>
#include <mutex>

namespace planch {

LeviShape::LeviShape(std::vector<int> b) : blocks(std::move(b)) {
  if (blocks.empty()) throw InputError("Levi shape needs at least one block");
  for (int n : blocks)
    if (n < 1) throw InputError("Levi blocks must be positive");
}

int LeviShape::total() const {
  int n = 0;
  for (int b : blocks) n += b;
  return n;
}

namespace {

std::mutex cache_mutex;
std::map<int, QHalfPoly> gl_cache;
std::map<int, QHalfPoly> poincare_cache;

}  // namespace

QFactored gl_order_factored(int n) {
  if (n < 0) throw InputError("group order needs n >= 0");
  QFactored f = QFactored::q_pow(HalfInt(static_cast<long long>(n) * (n - 1) / 2));
  for (long long j = 1; j <= n; ++j) f *= QFactored::q_pow_minus_one(j);
  return f;
}

QHalfPoly gl_order(int n) {
  if (n < 0) throw InputError("group order needs n >= 0");
  std::lock_guard lock(cache_mutex);
  auto it = gl_cache.find(n);
  if (it != gl_cache.end()) return it->second;
  QHalfPoly p(BigRat(1));
  for (long long j = 0; j < n; ++j)
    p *= QHalfPoly::q_pow(HalfInt(n)) - QHalfPoly::q_pow(HalfInt(j));
  gl_cache[n] = p;
  return p;
}

QHalfPoly poincare_poly(int n) {
  if (n < 0) throw InputError("Poincare polynomial needs n >= 0");
  std::lock_guard lock(cache_mutex);
  auto it = poincare_cache.find(n);
  if (it != poincare_cache.end()) return it->second;
  QHalfPoly p(BigRat(1));
  QHalfPoly qm1 = QHalfPoly::q_pow_minus_one(HalfInt(1));
  for (long long i = 1; i <= n; ++i) {
    auto quotient = QHalfPoly::q_pow_minus_one(HalfInt(i)).divided_by(qm1);
    if (!quotient) throw Error("internal: q^i - 1 must be divisible by q - 1");
    p *= *quotient;
  }
  poincare_cache[n] = p;
  return p;
}

QFactored poincare_inverse_factored(int n) {
  // P_{S_n}(1/q) = prod_{i=2..n} (q^{-i} - 1)/(q^{-1} - 1), and
  // q^{-a} - 1 = -q^{-a} (q^a - 1).
  if (n < 0) throw InputError("Poincare polynomial needs n >= 0");
  QFactored f;
  for (long long i = 2; i <= n; ++i) {
    QFactored term = QFactored::from_rational(BigRat(-1)) * QFactored::q_pow(HalfInt(-i)) *
                     QFactored::q_pow_minus_one(i);
    QFactored base = QFactored::from_rational(BigRat(-1)) * QFactored::q_pow(HalfInt(-1)) *
                     QFactored::q_pow_minus_one(1);
    f *= term / base;
  }
  return f;
}

QFactored gamma_factor_factored(const LeviShape& shape) {
  long long cross = 0;
  const auto& b = shape.blocks;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) cross += static_cast<long long>(b[i]) * b[j];
  QFactored f = QFactored::q_pow(HalfInt(-2 * cross)) * gl_order_factored(shape.total());
  for (int ni : b) f /= gl_order_factored(ni);
  return f;
}

QRatio gamma_factor(const LeviShape& shape) { return gamma_factor_factored(shape).expand(); }

QRatio gamma_factor_poincare(const LeviShape& shape) {
  QRatio r(poincare_poly(shape.total()).reciprocal_variable());
  for (int ni : shape.blocks) r = r / QRatio(poincare_poly(ni).reciprocal_variable());
  return r;
}

QFactored c_function_factored(const LeviShape& shape) {
  const auto& b = shape.blocks;
  int k = shape.block_count();
  if (k == 1) return QFactored();
  QFactored f;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) f *= poincare_inverse_factored(b[i] + b[j]);
  f /= poincare_inverse_factored(shape.total());
  for (int ni : b) f /= poincare_inverse_factored(ni).pow(k - 2);
  return f;
}

QRatio c_function(const LeviShape& shape) { return c_function_factored(shape).expand(); }

QRatio iwahori_volume(int n) { return QRatio(poincare_poly(n)).inverse(); }

}  // namespace planch
