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

#ifndef DECMIN_RNG_HPP
#define DECMIN_RNG_HPP

#include <cstdint>

namespace decmin {

// SplitMix64.  Used instead of <random> distributions so that seeded runs
// produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
    return lo + static_cast<long long>(next_u64() % span);
  }

  bool coin(double p = 0.5) {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) <
           p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace decmin

#endif  // DECMIN_RNG_HPP
