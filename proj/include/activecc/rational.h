// Copyright 2026 The activecc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACTIVECC_RATIONAL_H_
#define ACTIVECC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace activecc {

// Exact value numerator / denominator with a positive denominator. Regret
// estimates are sums of integers over a common denominator, so keeping them
// exact makes equality tests meaningful.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t numerator, int64_t denominator = 1)  // NOLINT
      : num_(numerator), den_(denominator) {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr int64_t numerator() const { return num_; }
  constexpr int64_t denominator() const { return den_; }
  constexpr double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    const int64_t g = std::gcd(a.den_, b.den_);
    return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g),
                    a.den_ / g * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace activecc

#endif  // ACTIVECC_RATIONAL_H_
