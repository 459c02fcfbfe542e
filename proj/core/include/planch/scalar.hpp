#pragma once

#include <string>

#include "planch/qratio.hpp"

namespace planch {

// Scalar that is either exact (a rational function of q) or a measured
// floating-point number. Formal degrees flow through this type: exact when
// the input data allows it, numeric otherwise. Products stay exact only if
// every operand is.
class Scalar {
 public:
  Scalar() : exact_(true), x_(QRatio::one()) {}
  explicit Scalar(QRatio x) : exact_(true), x_(std::move(x)) {}
  explicit Scalar(double v) : exact_(false), v_(v) {}

  static Scalar one() { return Scalar(); }

  bool is_exact() const { return exact_; }
  const QRatio& exact() const {
    if (!exact_) throw MissingDataError("scalar is numeric, no exact form available");
    return x_;
  }
  double numeric() const { return v_; }

  double eval_at_q(double q) const { return exact_ ? x_.eval_at_q(q) : v_; }

  Scalar& mul(const Scalar& o, double q_for_numeric) {
    if (exact_ && o.exact_) {
      x_ *= o.x_;
    } else {
      double a = exact_ ? x_.eval_at_q(q_for_numeric) : v_;
      double b = o.exact_ ? o.x_.eval_at_q(q_for_numeric) : o.v_;
      exact_ = false;
      v_ = a * b;
    }
    return *this;
  }

  std::string str() const { return exact_ ? x_.str() : std::to_string(v_); }

 private:
  bool exact_;
  QRatio x_;
  double v_ = 0.0;
};

}  // namespace planch
