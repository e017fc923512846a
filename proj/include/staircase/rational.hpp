#pragma once

// Exact rationals for overhead and storage-cost bookkeeping, backed by
// arbitrary-precision integers so unit arithmetic never overflows.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {

using bigint = boost::multiprecision::cpp_int;

class rational {
 public:
  rational() : num_(0), den_(1) {}
  rational(bigint n) : num_(std::move(n)), den_(1) {}  // NOLINT(runtime/explicit)
  rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static rational of(std::int64_t n, std::int64_t d = 1) {
    return rational(bigint(n), bigint(d));
  }

  const bigint& num() const { return num_; }
  const bigint& den() const { return den_; }

  rational operator+(const rational& o) const {
    return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  rational operator-(const rational& o) const {
    return rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  rational operator*(const rational& o) const {
    return rational(num_ * o.num_, den_ * o.den_);
  }
  rational operator/(const rational& o) const {
    if (o.num_ == 0) throw div_zero_error("rational division by zero");
    return rational(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const rational& o) const { return !(*this == o); }
  bool operator<(const rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator>(const rational& o) const { return o < *this; }
  bool operator<=(const rational& o) const { return !(o < *this); }
  bool operator>=(const rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw div_zero_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    bigint g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  bigint num_;
  bigint den_;  // > 0, coprime with num_
};

}  // namespace staircase
