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

#ifndef DECMIN_SETFN_HPP
#define DECMIN_SETFN_HPP

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "decmin/arith.hpp"
#include "decmin/core.hpp"
#include "decmin/rng.hpp"

namespace decmin {

// Rank oracle for a matroid on the ground set.  Supports uniform matroids,
// partition matroids (per-block caps) and graphic matroids (ground elements
// are the edges of a multigraph; rank = forest rank).
class MatroidOracle {
 public:
  enum class Kind { Uniform, Partition, Graphic };

  static MatroidOracle uniform(int n, int rank) {
    if (rank < 0 || rank > n)
      throw ValidationError("uniform matroid rank out of range");
    MatroidOracle m;
    m.kind_ = Kind::Uniform;
    m.n_ = n;
    m.uniform_rank_ = rank;
    return m;
  }

  // blocks must partition {0..n-1}; caps[i] in [0, |blocks[i]|].
  static MatroidOracle partition(int n, std::vector<Subset> blocks,
                                 std::vector<int> caps) {
    if (blocks.size() != caps.size())
      throw ValidationError("partition matroid: blocks/caps size mismatch");
    Subset seen = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i] & seen)
        throw ValidationError("partition matroid: overlapping blocks");
      seen |= blocks[i];
      if (caps[i] < 0 || caps[i] > popcount(blocks[i]))
        throw ValidationError("partition matroid: cap out of range");
    }
    Subset full = n == 32 ? ~Subset(0) : ((Subset(1) << n) - 1);
    if (seen != full)
      throw ValidationError("partition matroid: blocks must cover the ground");
    MatroidOracle m;
    m.kind_ = Kind::Partition;
    m.n_ = n;
    m.blocks_ = std::move(blocks);
    m.caps_ = std::move(caps);
    return m;
  }

  // edges[i] = endpoints of ground element i in a multigraph on
  // {0..num_vertices-1}; loops allowed (rank contribution zero).
  static MatroidOracle graphic(int num_vertices,
                               std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
        throw ValidationError("graphic matroid: edge endpoint out of range");
    MatroidOracle m;
    m.kind_ = Kind::Graphic;
    m.n_ = static_cast<int>(edges.size());
    m.num_vertices_ = num_vertices;
    m.edges_ = std::move(edges);
    return m;
  }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int uniform_rank() const { return uniform_rank_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

  int rank(Subset x) const {
    switch (kind_) {
      case Kind::Uniform:
        return std::min(popcount(x), uniform_rank_);
      case Kind::Partition: {
        int r = 0;
        for (size_t i = 0; i < blocks_.size(); ++i)
          r += std::min(popcount(x & blocks_[i]), caps_[i]);
        return r;
      }
      case Kind::Graphic: {
        std::vector<int> parent(num_vertices_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
          while (parent[a] != a) a = parent[a] = parent[parent[a]];
          return a;
        };
        int r = 0;
        for (int i = 0; i < n_; ++i) {
          if (!(x >> i & 1u)) continue;
          int a = find(edges_[i].first), b = find(edges_[i].second);
          if (a != b) {
            parent[a] = b;
            ++r;
          }
        }
        return r;
      }
    }
    return 0;
  }

 private:
  MatroidOracle() = default;

  Kind kind_ = Kind::Uniform;
  int n_ = 0;
  int uniform_rank_ = 0;
  std::vector<Subset> blocks_;
  std::vector<int> caps_;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

struct SupermodularViolation {
  Subset x;
  Subset y;
  Int slack;  // p(X)+p(Y) - p(X&Y) - p(X|Y) > 0
};

// Integer-valued supermodular set function p with p(empty)=0, finite on all
// subsets.  Describes the base polyhedron
//   B = { x : x~(S) = p(S), x~(Z) >= p(Z) for all Z }.
// Dense tables are materialized up to kTableCacheMax elements; a parallel
// int64 table backs the subset-enumeration hot paths when values fit.
class SupermodularFn {
 public:
  enum class Kind { Table, CardinalityConvex, InducedEdges, MatroidCoc };

  static constexpr int kTableCacheMax = 20;
  static constexpr int kEagerValidateMax = 13;

  // Deferred validation skips the supermodularity scan, so that a suspect
  // table can be loaded and then inspected with validate_supermodular().
  static SupermodularFn from_table(GroundSet ground, std::vector<Int> values,
                                   bool validate = true) {
    ground.require_enumerable();
    if (values.size() != (size_t(1) << ground.n()))
      throw ValidationError("table oracle needs 2^n values");
    SupermodularFn p(std::move(ground), Kind::Table);
    p.table_ = std::move(values);
    if (p.table_[0] != 0) throw ValidationError("p(empty) must be 0");
    p.finish_init();
    if (validate) {
      auto bad = p.validate_supermodular_sampled();
      if (!bad.empty())
        throw ValidationError(
            "table oracle is not supermodular, e.g. X=" +
            p.ground_.subset_str(bad[0].x) + " Y=" +
            p.ground_.subset_str(bad[0].y));
    }
    return p;
  }

  // p(X) = g(|X|) with convex g, g(0)=0.
  static SupermodularFn from_cardinality_convex(GroundSet ground,
                                                std::vector<Int> g) {
    if (g.size() != size_t(ground.n()) + 1)
      throw ValidationError("cardinality oracle needs n+1 values");
    if (g[0] != 0) throw ValidationError("cardinality oracle needs g(0)=0");
    for (size_t k = 2; k < g.size(); ++k)
      if (g[k] - g[k - 1] < g[k - 1] - g[k - 2])
        throw ValidationError("cardinality oracle: g must be convex");
    SupermodularFn p(std::move(ground), Kind::CardinalityConvex);
    p.card_g_ = std::move(g);
    p.finish_init();
    return p;
  }

  // p(X) = #{edges with both ends in X} + offset~(X) + const for nonempty X.
  // The constant must be <= 0, otherwise supermodularity fails on disjoint
  // nonempty pairs.
  static SupermodularFn from_induced_edges(
      GroundSet ground, std::vector<std::pair<int, int>> edges, IntVec offset,
      Int offset_const) {
    if (offset.size() != size_t(ground.n()))
      throw ValidationError("induced-edge oracle: offset size mismatch");
    for (auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= ground.n() || v >= ground.n())
        throw ValidationError("induced-edge oracle: endpoint out of range");
    if (offset_const > 0)
      throw ValidationError("induced-edge oracle: offset_const must be <= 0");
    SupermodularFn p(std::move(ground), Kind::InducedEdges);
    p.edges_ = std::move(edges);
    p.offset_ = std::move(offset);
    p.offset_const_ = std::move(offset_const);
    p.finish_init();
    return p;
  }

  // p(X) = rank(S) - rank(S-X) + offset~(X): the supermodular description of
  // the matroid base polytope, translated by the modular offset.
  static SupermodularFn from_matroid_cocomplement(GroundSet ground,
                                                  MatroidOracle matroid,
                                                  IntVec offset) {
    if (matroid.n() != ground.n())
      throw ValidationError("matroid oracle: ground size mismatch");
    if (offset.size() != size_t(ground.n()))
      throw ValidationError("matroid oracle: offset size mismatch");
    SupermodularFn p(std::move(ground), Kind::MatroidCoc);
    p.matroid_ = std::make_shared<MatroidOracle>(std::move(matroid));
    p.offset_ = std::move(offset);
    p.finish_init();
    return p;
  }

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }
  Kind kind() const { return kind_; }

  Int eval(Subset x) const {
    if (!table_.empty()) return table_[x];
    return eval_raw(x);
  }

  Int p_S() const { return eval(ground_.full_mask()); }

  // True when all values fit in int64; enables the fast paths.
  bool fits_int64() const { return !fast_.empty(); }
  long long eval64(Subset x) const { return fast_[x]; }
  const std::vector<long long>& table64() const { return fast_; }

  // Exhaustive supermodularity check over all subset pairs (n <= 13 gating
  // as for eager table validation); returns violations, capped at 64.
  std::vector<SupermodularViolation> validate_supermodular() const {
    ground_.require_enumerable();
    if (n() > kEagerValidateMax) return validate_supermodular_sampled();
    return validate_pairs_exhaustive();
  }

  // Lovász (linear) extension along the pi-decreasing order, ties broken by
  // ground index.  Equals min{pi x : x integral in B} for supermodular p.
  template <typename Num>
  Num lovasz_ext(const std::vector<Num>& pi) const {
    if (pi.size() != size_t(n()))
      throw DomainError("lovasz_ext: dimension mismatch");
    std::vector<int> order(n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pi[a] > pi[b]; });
    Num val = 0;
    Subset prefix = 0;
    for (int j = 0; j < n(); ++j) {
      prefix |= Subset(1) << order[j];
      Num coeff = (j + 1 < n()) ? Num(pi[order[j]] - pi[order[j + 1]])
                                : Num(pi[order[j]]);
      val += Num(eval(prefix)) * coeff;
    }
    return val;
  }

 private:
  SupermodularFn(GroundSet ground, Kind kind)
      : ground_(std::move(ground)), kind_(kind) {}

  Int eval_raw(Subset x) const {
    switch (kind_) {
      case Kind::Table:
        return table_[x];
      case Kind::CardinalityConvex:
        return card_g_[popcount(x)];
      case Kind::InducedEdges: {
        if (x == 0) return 0;
        Int v = offset_const_;
        for (auto& [u, w] : edges_)
          if ((x >> u & 1u) && (x >> w & 1u)) ++v;
        for (int i = 0; i < n(); ++i)
          if (x >> i & 1u) v += offset_[i];
        return v;
      }
      case Kind::MatroidCoc: {
        Int v = matroid_->rank(ground_.full_mask()) -
                matroid_->rank(ground_.full_mask() & ~x);
        for (int i = 0; i < n(); ++i)
          if (x >> i & 1u) v += offset_[i];
        return v;
      }
    }
    return 0;
  }

  void finish_init() {
    if (n() <= kTableCacheMax && kind_ != Kind::Table) {
      table_.resize(size_t(1) << n());
      for (Subset x = 0; x < table_.size(); ++x) table_[x] = eval_raw(x);
    }
    if (!table_.empty()) {
      bool ok = true;
      for (const Int& v : table_)
        if (v < std::numeric_limits<long long>::min() / 4 ||
            v > std::numeric_limits<long long>::max() / 4) {
          ok = false;
          break;
        }
      if (ok) {
        fast_.resize(table_.size());
        for (size_t i = 0; i < table_.size(); ++i)
          fast_[i] = static_cast<long long>(table_[i]);
      }
    }
  }

  std::vector<SupermodularViolation> validate_pairs_exhaustive() const {
    std::vector<SupermodularViolation> bad;
    Subset full = ground_.full_mask();
    for (Subset x = 0; x <= full; ++x) {
      for (Subset y = x + 1; y <= full; ++y) {
        if ((x & y) == x || (x & y) == y) continue;  // nested pairs are tight
        Int slack = eval(x) + eval(y) - eval(x & y) - eval(x | y);
        if (slack > 0) {
          bad.push_back({x, y, slack});
          if (bad.size() >= 64) return bad;
        }
      }
      if (x == full) break;
    }
    return bad;
  }

  std::vector<SupermodularViolation> validate_supermodular_sampled() const {
    if (n() <= kEagerValidateMax) return validate_pairs_exhaustive();
    std::vector<SupermodularViolation> bad;
    Rng rng(0x5eedULL + n());
    Subset full = ground_.full_mask();
    for (int t = 0; t < 20000; ++t) {
      Subset x = static_cast<Subset>(rng.next_u64()) & full;
      Subset y = static_cast<Subset>(rng.next_u64()) & full;
      Int slack = eval(x) + eval(y) - eval(x & y) - eval(x | y);
      if (slack > 0) {
        bad.push_back({x, y, slack});
        if (bad.size() >= 64) break;
      }
    }
    return bad;
  }

  GroundSet ground_;
  Kind kind_;
  std::vector<Int> table_;
  std::vector<long long> fast_;
  std::vector<Int> card_g_;
  std::vector<std::pair<int, int>> edges_;
  IntVec offset_;
  Int offset_const_ = 0;
  std::shared_ptr<MatroidOracle> matroid_;
};

// Submodular description of the same polyhedron: b(X) = p(S) - p(S-X).
class SubmodularFn {
 public:
  explicit SubmodularFn(SupermodularFn p) : p_(std::move(p)) {}

  const GroundSet& ground() const { return p_.ground(); }

  Int eval(Subset x) const {
    Subset full = p_.ground().full_mask();
    return p_.eval(full) - p_.eval(full & ~x);
  }

  // Complement of the complement reproduces p.
  SupermodularFn complement_p() const { return p_; }

 private:
  SupermodularFn p_;
};

inline SubmodularFn complement_b(const SupermodularFn& p) {
  return SubmodularFn(p);
}

}  // namespace decmin

#endif  // DECMIN_SETFN_HPP
