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

#ifndef DECMIN_PARTITION_HPP
#define DECMIN_PARTITION_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

namespace detail {

// Scan of max{ p(X) - lambda |X| } over all X, reporting the maximizer
// lattice's smallest member (AND of all maximizers) or largest member (OR of
// all maximizers).  Exact in rationals: compares den*p(X) - num*|X|.
struct MaximizerScan {
  Int best_num;      // den * p(X) - num * |X| at the optimum
  Subset smallest;
  Subset largest;
};

inline MaximizerScan scan_maximizers(const SupermodularFn& p, const Int& num,
                                     const Int& den) {
  p.ground().require_enumerable();
  Subset full = p.ground().full_mask();
  MaximizerScan r{den * p.eval(0), 0, 0};
  for (Subset x = 1; x <= full; ++x) {
    Int v = den * p.eval(x) - num * popcount(x);
    if (v > r.best_num) {
      r.best_num = std::move(v);
      r.smallest = x;
      r.largest = x;
    } else if (v == r.best_num) {
      r.smallest &= x;
      r.largest |= x;
    }
    if (x == full) break;
  }
  // The maximizer family of a supermodular p is a lattice, so its AND / OR
  // are themselves maximizers.
  if (den * p.eval(r.smallest) - num * popcount(r.smallest) != r.best_num ||
      den * p.eval(r.largest) - num * popcount(r.largest) != r.best_num)
    throw InternalCheckError("maximizer family is not a lattice");
  return r;
}

}  // namespace detail

// Smallest maximizer L(lambda) of p(X) - lambda |X|.
inline Subset smallest_maximizer(const SupermodularFn& p, const Rat& lambda) {
  return detail::scan_maximizers(p, numerator(lambda), denominator(lambda))
      .smallest;
}

// Largest maximizer at lambda; equals L(lambda - eps) for small eps > 0.
inline Subset largest_maximizer(const SupermodularFn& p, const Rat& lambda) {
  return detail::scan_maximizers(p, numerator(lambda), denominator(lambda))
      .largest;
}

// Essential values beta_1 > ... > beta_q, canonical chain C_1 c ... c C_q = S,
// canonical partition S_j = C_j - C_{j-1}, and the vectors
// pi*(s) = 2 beta_j - 1, Delta*(s) = beta_j - 1 on S_j.
struct CanonicalDecomposition {
  std::vector<Int> betas;
  std::vector<Subset> chain;
  std::vector<Subset> blocks;
  IntVec pi_star;
  IntVec delta_star;

  int block_of(int element) const {
    for (size_t j = 0; j < blocks.size(); ++j)
      if (blocks[j] >> element & 1u) return static_cast<int>(j);
    throw DomainError("canonical decomposition: element not covered");
  }
};

// Critical values lambda_1 > ... > lambda_r with the principal chain and
// partition.
struct PrincipalDecomposition {
  std::vector<Rat> lambdas;
  std::vector<Subset> chain;
  std::vector<Subset> blocks;

  int block_of(int element) const {
    for (size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i] >> element & 1u) return static_cast<int>(i);
    throw DomainError("principal decomposition: element not covered");
  }
};

// Iterative construction: on the complement of the current chain member,
// beta_j maximizes the rounded-up average gain, S_j is the smallest maximizer
// of h_j(X) = p(X u C) - (beta_j - 1)|X| - p(C).  The result is recomputed
// through the jump characterization L(beta) != L(beta - 1) and both must
// agree exactly.
inline CanonicalDecomposition canonical_decomposition(const SupermodularFn& p) {
  p.ground().require_enumerable();
  const int n = p.n();
  const Subset full = p.ground().full_mask();
  CanonicalDecomposition out;
  Subset c = 0;
  while (c != full) {
    Subset comp = full & ~c;
    Int pc = p.eval(c);
    bool first = true;
    Int beta = 0;
    for (Subset x = comp; x; x = (x - 1) & comp) {
      Int val = ceil_div(p.eval(x | c) - pc, Int(popcount(x)));
      if (first || val > beta) {
        beta = std::move(val);
        first = false;
      }
    }
    // Smallest maximizer of h_j over subsets of the complement.
    Int best = 0;  // h_j(empty) = 0
    Subset sj = 0;
    bool have = false;
    for (Subset x = comp; x; x = (x - 1) & comp) {
      Int h = p.eval(x | c) - (beta - 1) * popcount(x) - pc;
      if (!have || h > best) {
        best = std::move(h);
        sj = x;
        have = true;
      } else if (h == best) {
        sj &= x;
      }
    }
    if (best <= 0 || sj == 0)
      throw InternalCheckError("canonical block must strictly gain");
    out.betas.push_back(beta);
    out.blocks.push_back(sj);
    c |= sj;
    out.chain.push_back(c);
  }

  // Independent route: C_j = L(beta_j - 1), and the essential values are
  // exactly the integers where L(beta) jumps.
  for (size_t j = 0; j < out.betas.size(); ++j) {
    Subset l = smallest_maximizer(p, Rat(out.betas[j] - 1));
    if (l != out.chain[j])
      throw InternalCheckError("canonical chain disagrees with L(beta-1)");
    Subset at_beta = smallest_maximizer(p, Rat(out.betas[j]));
    if (at_beta == out.chain[j])
      throw InternalCheckError("essential value fails the jump test");
    if (at_beta != (j > 0 ? out.chain[j - 1] : Subset(0)))
      throw InternalCheckError("L(beta_j) must close the previous chain set");
  }

  out.pi_star.assign(n, Int(0));
  out.delta_star.assign(n, Int(0));
  for (size_t j = 0; j < out.blocks.size(); ++j)
    for (int i = 0; i < n; ++i)
      if (out.blocks[j] >> i & 1u) {
        out.pi_star[i] = 2 * out.betas[j] - 1;
        out.delta_star[i] = out.betas[j] - 1;
      }
  return out;
}

// Discrete Newton iteration on the exact rational ratios
// (p(X) - p(C)) / (|X| - |C|): each step yields the next critical value and
// the next principal chain member (largest maximizer at that value).
inline PrincipalDecomposition principal_decomposition(const SupermodularFn& p) {
  p.ground().require_enumerable();
  const Subset full = p.ground().full_mask();
  PrincipalDecomposition out;
  Subset c = 0;
  while (c != full) {
    Subset comp = full & ~c;
    Int pc = p.eval(c);
    bool first = true;
    Rat lambda;
    for (Subset x = comp; x; x = (x - 1) & comp) {
      Rat ratio(p.eval(x | c) - pc, Int(popcount(x)));
      if (first || ratio > lambda) {
        lambda = std::move(ratio);
        first = false;
      }
    }
    detail::MaximizerScan scan =
        detail::scan_maximizers(p, numerator(lambda), denominator(lambda));
    if (scan.smallest != c)
      throw InternalCheckError(
          "principal chain: smallest maximizer must be the previous member");
    if (!out.lambdas.empty() && lambda >= out.lambdas.back())
      throw InternalCheckError("critical values must strictly decrease");
    out.lambdas.push_back(lambda);
    out.blocks.push_back(scan.largest & ~c);
    c = scan.largest;
    out.chain.push_back(c);
  }
  return out;
}

// Aggregation relation between the two decompositions: essential values are
// the distinct rounded-up critical values, each canonical block is the union
// of the principal blocks rounding to it, and the canonical chain is a
// subchain of the principal chain.
struct PartitionRelation {
  bool ok = true;
  std::vector<std::vector<int>> index_map;  // I(j), 1-based indices into pri
  std::string message;
};

inline PartitionRelation relate_partitions(const CanonicalDecomposition& can,
                                           const PrincipalDecomposition& pri) {
  PartitionRelation rel;
  auto fail = [&rel](const std::string& m) {
    rel.ok = false;
    if (!rel.message.empty()) rel.message += "; ";
    rel.message += m;
  };

  std::vector<Int> rounded;
  rounded.reserve(pri.lambdas.size());
  for (const Rat& l : pri.lambdas) rounded.push_back(ceil_rat(l));

  std::vector<Int> distinct;
  for (const Int& b : rounded)
    if (distinct.empty() || b != distinct.back()) distinct.push_back(b);
  if (distinct != can.betas)
    fail("essential values are not the distinct rounded-up critical values");

  for (size_t j = 0; j < can.betas.size(); ++j) {
    bool found = false;
    for (const Rat& l : pri.lambdas)
      if (Rat(can.betas[j]) >= l && l > Rat(can.betas[j] - 1)) found = true;
    if (!found) fail("essential value without critical value in (beta-1,beta]");
  }

  rel.index_map.assign(can.betas.size(), {});
  for (size_t j = 0; j < can.betas.size(); ++j) {
    Subset blk = 0;
    for (size_t i = 0; i < rounded.size(); ++i)
      if (rounded[i] == can.betas[j]) {
        rel.index_map[j].push_back(static_cast<int>(i) + 1);
        blk |= pri.blocks[i];
      }
    if (blk != can.blocks[j]) fail("canonical block is not the stated union");
    if (!rel.index_map[j].empty()) {
      int last = rel.index_map[j].back() - 1;
      if (pri.chain[last] != can.chain[j])
        fail("canonical chain member missing from the principal chain");
    }
  }
  return rel;
}

}  // namespace decmin

#endif  // DECMIN_PARTITION_HPP
