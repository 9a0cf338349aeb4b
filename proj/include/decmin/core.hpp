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

#ifndef DECMIN_CORE_HPP
#define DECMIN_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "decmin/arith.hpp"

namespace decmin {

// Subsets of the ground set are bitmasks.  Every operation that enumerates
// all 2^n subsets is gated by kMaxGroundSize.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Subset s) { return __builtin_popcount(s); }

// Ordered ground set with distinct element labels.  Iteration order is the
// label order given at construction and is total and fixed.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("ground set must be nonempty");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (!index_.emplace(labels_[i], i).second)
        throw ValidationError("ground set labels must be distinct: " +
                              labels_[i]);
    }
  }

  // Convenience: elements named s1..sn.
  static GroundSet numbered(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
    return GroundSet(std::move(labels));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw ValidationError("unknown ground element: " + label);
    return it->second;
  }

  Subset full_mask() const {
    return n() == 32 ? ~Subset(0) : ((Subset(1) << n()) - 1);
  }

  void require_enumerable() const {
    if (n() > kMaxGroundSize)
      throw DomainError("ground set too large for subset enumeration (n > " +
                        std::to_string(kMaxGroundSize) + ")");
  }

  std::string subset_str(Subset z) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n(); ++i) {
      if (z >> i & 1u) {
        if (!first) out += ",";
        out += labels_[i];
        first = false;
      }
    }
    return out + "}";
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int tilde_sum(const IntVec& x, Subset z) {
  Int s = 0;
  for (int i = 0; z >> i; ++i)
    if (z >> i & 1u) s += x[i];
  return s;
}

inline Rat tilde_sum(const RatVec& x, Subset z) {
  Rat s = 0;
  for (int i = 0; z >> i; ++i)
    if (z >> i & 1u) s += x[i];
  return s;
}

inline IntVec chi(Subset z, int n) {
  IntVec x(n, Int(0));
  for (int i = 0; i < n; ++i)
    if (z >> i & 1u) x[i] = 1;
  return x;
}

inline std::vector<Int> sort_desc(const IntVec& x) {
  std::vector<Int> y(x);
  std::sort(y.begin(), y.end(), std::greater<Int>());
  return y;
}

inline std::vector<Int> sort_asc(const IntVec& x) {
  std::vector<Int> y(x);
  std::sort(y.begin(), y.end());
  return y;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int square_sum(const IntVec& x) {
  Int s = 0;
  for (const Int& v : x) s += v * v;
  return s;
}

inline RatVec to_rat(const IntVec& x) {
  RatVec r;
  r.reserve(x.size());
  for (const Int& v : x) r.emplace_back(v);
  return r;
}

inline IntVec floor_vec(const RatVec& x) {
  IntVec r;
  r.reserve(x.size());
  for (const Rat& v : x) r.push_back(floor_rat(v));
  return r;
}

inline IntVec ceil_vec(const RatVec& x) {
  IntVec r;
  r.reserve(x.size());
  for (const Rat& v : x) r.push_back(ceil_rat(v));
  return r;
}

inline bool leq(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::string vec_str(const IntVec& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].str();
  }
  return out + ")";
}

inline std::string vec_str(const RatVec& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += numerator(x[i]).str();
    if (denominator(x[i]) != 1) out += "/" + denominator(x[i]).str();
  }
  return out + ")";
}

}  // namespace decmin

#endif  // DECMIN_CORE_HPP
