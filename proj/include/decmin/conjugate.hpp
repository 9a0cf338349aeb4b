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

#ifndef DECMIN_CONJUGATE_HPP
#define DECMIN_CONJUGATE_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "decmin/arith.hpp"

namespace decmin {

// Univariate integer-valued discrete convex function phi with an integer
// interval as effective domain.  Values outside the domain are +inf.
class DiscreteConvexFn {
 public:
  enum class Kind {
    Square,        // k^2
    WeightedSquare,  // a k^2, a >= 1
    PowerEven,     // a k^(2b), a >= 1, b >= 1
    Exp,           // a b^k on k >= 0, a >= 1, b >= 2
    Abs,           // |k - a|
    PosPart,       // max(0, k - a)
    PieceLin2,     // 0 on [0,a], lam (k-a) on [a,b], 0 <= a <= b, lam >= 0
    IntervalDist,  // max(a - k, 0, k - b), a <= b
    Table,         // explicit values on [lo, lo + size - 1]
    Translated,    // base(k - a) + b k + c
  };

  static DiscreteConvexFn square() { return DiscreteConvexFn(Kind::Square); }

  static DiscreteConvexFn weighted_square(Int a) {
    if (a < 1) throw DomainError("weighted_square: need a >= 1");
    DiscreteConvexFn f(Kind::WeightedSquare);
    f.a_ = std::move(a);
    return f;
  }

  static DiscreteConvexFn power_even(Int a, long b) {
    if (a < 1 || b < 1) throw DomainError("power_even: need a >= 1, b >= 1");
    DiscreteConvexFn f(Kind::PowerEven);
    f.a_ = std::move(a);
    f.b_ = b;
    return f;
  }

  static DiscreteConvexFn exp_growth(Int a, Int base) {
    if (a < 1 || base < 2)
      throw DomainError("exp_growth: need a >= 1, base >= 2");
    DiscreteConvexFn f(Kind::Exp);
    f.a_ = std::move(a);
    f.base_ = std::move(base);
    return f;
  }

  static DiscreteConvexFn abs_dist(Int a) {
    DiscreteConvexFn f(Kind::Abs);
    f.a_ = std::move(a);
    return f;
  }

  static DiscreteConvexFn pos_part(Int a) {
    DiscreteConvexFn f(Kind::PosPart);
    f.a_ = std::move(a);
    return f;
  }

  static DiscreteConvexFn piece_lin2(Int a, Int b, Int lam) {
    if (a < 0 || b < a || lam < 0)
      throw DomainError("piece_lin2: need 0 <= a <= b and lam >= 0");
    DiscreteConvexFn f(Kind::PieceLin2);
    f.a_ = std::move(a);
    f.b2_ = std::move(b);
    f.lam_ = std::move(lam);
    return f;
  }

  static DiscreteConvexFn interval_dist(Int a, Int b) {
    if (b < a) throw DomainError("interval_dist: need a <= b");
    DiscreteConvexFn f(Kind::IntervalDist);
    f.a_ = std::move(a);
    f.b2_ = std::move(b);
    return f;
  }

  static DiscreteConvexFn table(Int lo, std::vector<Int> values) {
    if (values.empty()) throw DomainError("table: empty domain");
    for (size_t k = 2; k < values.size(); ++k)
      if (values[k] - values[k - 1] < values[k - 1] - values[k - 2])
        throw ValidationError("table: values are not discrete convex");
    DiscreteConvexFn f(Kind::Table);
    f.a_ = std::move(lo);
    f.values_ = std::move(values);
    return f;
  }

  // k -> base(k - a) + b k + c.
  static DiscreteConvexFn translate(const DiscreteConvexFn& base, Int a, Int b,
                                    Int c) {
    if (a == 0 && b == 0 && c == 0) return base;
    DiscreteConvexFn f(Kind::Translated);
    f.base_fn_ = std::make_shared<DiscreteConvexFn>(base);
    f.a_ = std::move(a);
    f.b2_ = std::move(b);
    f.c_ = std::move(c);
    return f;
  }

  Kind kind() const { return kind_; }

  ExtInt dom_lo() const {
    switch (kind_) {
      case Kind::Exp:
        return ExtInt(Int(0));
      case Kind::PieceLin2:
        return ExtInt(Int(0));
      case Kind::Table:
        return ExtInt(a_);
      case Kind::Translated:
        return base_fn_->dom_lo() + ExtInt(a_);
      default:
        return ExtInt::neg_inf();
    }
  }

  ExtInt dom_hi() const {
    switch (kind_) {
      case Kind::PieceLin2:
        return ExtInt(b2_);
      case Kind::Table:
        return ExtInt(a_ + Int(values_.size()) - 1);
      case Kind::Translated:
        return base_fn_->dom_hi() + ExtInt(a_);
      default:
        return ExtInt::pos_inf();
    }
  }

  bool in_dom(const Int& k) const {
    return ExtInt(k) >= dom_lo() && ExtInt(k) <= dom_hi();
  }

  ExtInt eval(const Int& k) const {
    switch (kind_) {
      case Kind::Square:
        return ExtInt(k * k);
      case Kind::WeightedSquare:
        return ExtInt(a_ * k * k);
      case Kind::PowerEven:
        return ExtInt(a_ * ipow(k, 2 * static_cast<unsigned long>(b_)));
      case Kind::Exp:
        if (k < 0) return ExtInt::pos_inf();
        return ExtInt(a_ * ipow(base_, k.convert_to<unsigned long>()));
      case Kind::Abs:
        return ExtInt(abs(k - a_));
      case Kind::PosPart:
        return ExtInt(k > a_ ? k - a_ : Int(0));
      case Kind::PieceLin2:
        if (k < 0 || k > b2_) return ExtInt::pos_inf();
        return ExtInt(k <= a_ ? Int(0) : lam_ * (k - a_));
      case Kind::IntervalDist:
        if (k < a_) return ExtInt(a_ - k);
        if (k > b2_) return ExtInt(k - b2_);
        return ExtInt(Int(0));
      case Kind::Table: {
        if (k < a_ || k >= a_ + Int(values_.size())) return ExtInt::pos_inf();
        return ExtInt(values_[(k - a_).convert_to<size_t>()]);
      }
      case Kind::Translated: {
        ExtInt v = base_fn_->eval(k - a_);
        if (!v.finite()) return v;
        return ExtInt(v.value() + b2_ * k + c_);
      }
    }
    return ExtInt::pos_inf();
  }

  const DiscreteConvexFn& base_fn() const { return *base_fn_; }
  const Int& param_a() const { return a_; }
  const Int& param_b2() const { return b2_; }
  const Int& param_c() const { return c_; }
  const Int& param_lam() const { return lam_; }
  long param_power() const { return b_; }
  const Int& param_base() const { return base_; }
  const std::vector<Int>& table_values() const { return values_; }

 private:
  explicit DiscreteConvexFn(Kind kind) : kind_(kind) {}

  Kind kind_;
  Int a_ = 0;      // main parameter / table lo / translation shift
  Int b2_ = 0;     // second parameter / linear term of a translation
  Int c_ = 0;      // constant term of a translation
  Int lam_ = 0;    // slope of PieceLin2
  long b_ = 1;     // power exponent
  Int base_ = 2;   // exponential base
  std::vector<Int> values_;
  std::shared_ptr<DiscreteConvexFn> base_fn_;
};

// [phi(k) - phi(k-1), phi(k+1) - phi(k)], with infinities at the ends of the
// effective domain.  Requires k in dom phi.
inline std::pair<ExtInt, ExtInt> subgradient_interval(
    const DiscreteConvexFn& phi, const Int& k) {
  ExtInt fk = phi.eval(k);
  if (!fk.finite()) throw DomainError("subgradient_interval: k not in dom");
  ExtInt fm = phi.eval(k - 1), fp = phi.eval(k + 1);
  ExtInt lo = fm.finite() ? ExtInt(fk.value() - fm.value()) : ExtInt::neg_inf();
  ExtInt hi = fp.finite() ? ExtInt(fp.value() - fk.value()) : ExtInt::pos_inf();
  return {lo, hi};
}

// Conjugate psi(l) = max_k { k l - phi(k) }, realized by the closed form of
// each kind (finite tables are scanned, which is exact).
class ConjugateFn {
 public:
  explicit ConjugateFn(DiscreteConvexFn phi) : phi_(std::move(phi)) {}

  const DiscreteConvexFn& source() const { return phi_; }

  ExtInt eval(const Int& l) const { return eval_kind(phi_, l); }

  bool in_dom(const Int& l) const { return eval(l).finite(); }

 private:
  static ExtInt eval_kind(const DiscreteConvexFn& phi, const Int& l) {
    using Kind = DiscreteConvexFn::Kind;
    switch (phi.kind()) {
      case Kind::Square: {
        Int f = floor_div(l, 2), c = ceil_div(l, 2);
        return ExtInt(f * c);
      }
      case Kind::WeightedSquare: {
        const Int& a = phi.param_a();
        Int k0 = floor_div(l + a, 2 * a);
        return ExtInt(k0 * (l - a * k0));
      }
      case Kind::PowerEven: {
        // Maximizer of k l - a k^(2b) is within one of the real stationary
        // point (l / 2ab)^(1/(2b-1)); scan the integer neighbours.
        const Int& a = phi.param_a();
        unsigned long b = static_cast<unsigned long>(phi.param_power());
        Int labs = abs(l);
        Int lo = 0, hi = 1;
        while (2 * a * Int(b) * ipow(hi, 2 * b - 1) <= labs) hi *= 2;
        while (lo < hi) {
          Int mid = (lo + hi + 1) / 2;
          if (2 * a * Int(b) * ipow(mid, 2 * b - 1) <= labs)
            lo = mid;
          else
            hi = mid - 1;
        }
        Int best = 0;  // k = 0 gives 0
        for (Int k = lo; k <= lo + 1; ++k) {
          Int cand = labs * k - a * ipow(k, 2 * b);
          best = std::max(best, cand);
        }
        return ExtInt(best);
      }
      case Kind::Exp: {
        const Int& a = phi.param_a();
        const Int& base = phi.param_base();
        // Increments of k l - a base^k stay positive while
        // a (base-1) base^k < l; stop at the first k where they are not.
        Int k = 0, pw = 1;
        while (a * (base - 1) * pw < l) {
          ++k;
          pw *= base;
        }
        return ExtInt(k * l - a * pw);
      }
      case Kind::Abs:
        if (l < -1 || l > 1) return ExtInt::pos_inf();
        return ExtInt(phi.param_a() * l);
      case Kind::PosPart:
        if (l < 0 || l > 1) return ExtInt::pos_inf();
        return ExtInt(l == 0 ? Int(0) : phi.param_a());
      case Kind::PieceLin2: {
        const Int& a = phi.param_a();
        const Int& b = phi.param_b2();
        const Int& lam = phi.param_lam();
        if (l <= 0) return ExtInt(Int(0));
        if (l <= lam) return ExtInt(a * l);
        return ExtInt(b * l - (b - a) * lam);
      }
      case Kind::IntervalDist:
        if (l == -1) return ExtInt(-phi.param_a());
        if (l == 0) return ExtInt(Int(0));
        if (l == 1) return ExtInt(phi.param_b2());
        return ExtInt::pos_inf();
      case Kind::Table: {
        const std::vector<Int>& vals = phi.table_values();
        Int best = phi.param_a() * l - vals[0];
        for (size_t i = 1; i < vals.size(); ++i) {
          Int cand = (phi.param_a() + Int(i)) * l - vals[i];
          best = std::max(best, cand);
        }
        return ExtInt(best);
      }
      case Kind::Translated: {
        // (phi0(k-a) + b k + c)* (l) = psi0(l-b) + a (l-b) - c.
        const Int& a = phi.param_a();
        const Int& b = phi.param_b2();
        const Int& c = phi.param_c();
        ExtInt inner = eval_kind(phi.base_fn(), l - b);
        if (!inner.finite()) return inner;
        return ExtInt(inner.value() + a * (l - b) - c);
      }
    }
    return ExtInt::pos_inf();
  }

  DiscreteConvexFn phi_;
};

inline ConjugateFn conjugate(const DiscreteConvexFn& phi) {
  return ConjugateFn(phi);
}

// phi(k) + psi(l) - k l; nonnegative, zero exactly when l lies in the
// subgradient interval of phi at k.
inline Int fenchel_young_slack(const DiscreteConvexFn& phi, const Int& k,
                               const Int& l) {
  ExtInt fk = phi.eval(k);
  if (!fk.finite()) throw DomainError("fenchel_young_slack: k not in dom phi");
  ExtInt pl = conjugate(phi).eval(l);
  if (!pl.finite()) throw DomainError("fenchel_young_slack: l not in dom psi");
  Int slack = fk.value() + pl.value() - k * l;
  if (slack < 0)
    throw InternalCheckError("Fenchel-Young inequality violated");
  return slack;
}

}  // namespace decmin

#endif  // DECMIN_CONJUGATE_HPP
