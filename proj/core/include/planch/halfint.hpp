#pragma once

#include <compare>
#include <string>

#include "planch/errors.hpp"

namespace planch {

// Element of (1/2)Z, stored as its doubled value so arithmetic stays exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }

  long long integer() const {
    if (!is_integer()) throw InputError("half-integer is not integral: " + str());
    return twice_ / 2;
  }

  // Exact division by two; defined only on integral values.
  HalfInt halved() const {
    if (!is_integer()) throw InputError("cannot halve a proper half-integer: " + str());
    return from_twice(twice_ / 2);
  }

  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator*(HalfInt a, long long k) { return from_twice(a.twice_ * k); }
  friend constexpr HalfInt operator*(long long k, HalfInt a) { return a * k; }
  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }

  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

  // "2", "-1", "1/2", "-3/2"
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  long long twice_ = 0;
};

constexpr HalfInt half_of(long long t) { return HalfInt::from_twice(t); }

}  // namespace planch
