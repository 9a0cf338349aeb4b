// Copyright 2026 The Authors.
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

#ifndef DECMIN_ARITH_HPP
#define DECMIN_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace decmin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A proved identity failed to hold; always indicates a bug.
struct InternalCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw DomainError("floor_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw DomainError("ceil_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Int ceil_rat(const Rat& r) {
  return ceil_div(numerator(r), denominator(r));
}

inline Int ipow(Int base, unsigned long exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Integers extended with +/-infinity.  Infinite values absorb in addition;
// adding opposite infinities is a usage error.
class ExtInt {
 public:
  ExtInt() : tag_(0) {}
  ExtInt(Int v) : tag_(0), v_(std::move(v)) {}  // NOLINT(runtime/explicit)
  ExtInt(long long v) : tag_(0), v_(v) {}       // NOLINT(runtime/explicit)

  static ExtInt pos_inf() {
    ExtInt e;
    e.tag_ = 1;
    return e;
  }
  static ExtInt neg_inf() {
    ExtInt e;
    e.tag_ = -1;
    return e;
  }

  bool finite() const { return tag_ == 0; }
  bool is_pos_inf() const { return tag_ == 1; }
  bool is_neg_inf() const { return tag_ == -1; }

  const Int& value() const {
    if (!finite()) throw DomainError("ExtInt: value() on infinite");
    return v_;
  }

  ExtInt operator-() const {
    if (is_pos_inf()) return neg_inf();
    if (is_neg_inf()) return pos_inf();
    return ExtInt(-v_);
  }

  ExtInt operator+(const ExtInt& o) const {
    if (finite() && o.finite()) return ExtInt(v_ + o.v_);
    if (is_pos_inf() && o.is_neg_inf()) throw DomainError("ExtInt: inf - inf");
    if (is_neg_inf() && o.is_pos_inf()) throw DomainError("ExtInt: inf - inf");
    return finite() ? o : *this;
  }
  ExtInt operator-(const ExtInt& o) const { return *this + (-o); }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != 0 || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
    return a.tag_ == 0 && a.v_ < b.v_;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

  std::string str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return v_.str();
  }

 private:
  int tag_;  // -1, 0, +1
  Int v_;
};

}  // namespace decmin

#endif  // DECMIN_ARITH_HPP
