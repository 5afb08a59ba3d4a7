/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_ORACLE_HPP
#define CAREXT_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "carext/ball.hpp"
#include "carext/elementary.hpp"

// Precision-indexed oracles: the engine's rendering of names. A name of a
// point is a function from precision k to a ball of radius <= 2^-k around it;
// a name of a map also carries a modulus of continuity. Oracles must be pure:
// identical inputs give identical outputs, and concurrent evaluation is safe.

namespace carext {

using Precision = long;  // radius target 2^-k

// Monotone map on naturals. The wrapper enforces monotonicity by running
// maxima and memoizes, so wrapped functions may be arbitrarily expensive.
class Modulus {
 public:
  Modulus() : Modulus([](long k) { return k; }) {}
  explicit Modulus(std::function<long(long)> fn)
      : state_(std::make_shared<State>(std::move(fn))) {}

  long operator()(long k) const {
    if (k < 0) k = 0;
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(k);
    if (it != state_->memo.end()) return it->second;
    long v = state_->fn(k);
    // running maximum over everything at or below k keeps the table monotone
    for (auto& [kk, vv] : state_->memo)
      if (kk <= k) v = std::max(v, vv);
    state_->memo[k] = v;
    for (auto& [kk, vv] : state_->memo)
      if (kk > k && vv < v) vv = v;
    return v;
  }

 private:
  struct State {
    explicit State(std::function<long(long)> f) : fn(std::move(f)) {}
    std::function<long(long)> fn;
    std::map<long, long> memo;
    std::mutex mu;
  };
  std::shared_ptr<State> state_;
};

inline Modulus shift_modulus(long c) {
  return Modulus([c](long k) { return k + c; });
}

// h = m1 . m, the composition used by connectivity witnesses.
inline Modulus compose_moduli(const Modulus& m1, const Modulus& m) {
  return Modulus([m1, m](long k) { return m1(m(k)); });
}

// Strictly increasing tightening; several constructions need h(t+1) > h(t).
inline Modulus strictly_increasing(const Modulus& m) {
  return Modulus([m](long k) { return m(k) + k; });
}

// ---------------------------------------------------------------------------
// PointName: approximation oracle for one complex number.
// ---------------------------------------------------------------------------
struct PointName {
  std::function<Ball(Precision)> approx;

  Ball at(Precision k) const { return approx(std::max<Precision>(k, 0)); }
};

inline PointName exact_point(const RationalPoint& p) {
  return PointName{[p](Precision) { return Ball(p); }};
}

inline PointName point_on_circle(const Rational& t) {
  return PointName{[t](Precision k) { return circle_point(t, k + 2); }};
}

enum class DomainTag {
  unit_interval,
  unit_circle_params,
  open_disk,
  closed_disk,
  plane_region,
};

// ---------------------------------------------------------------------------
// MapName: approximation oracle for a continuous map. For a point parameter
// (radius-0 ball) the result has radius <= 2^-k; for a fat parameter it
// encloses the whole image set. `certified` records whether the producer
// vouches for the enclosures (built-in analytic families do).
// ---------------------------------------------------------------------------
struct MapName {
  std::function<Ball(const Ball&, Precision)> eval;
  Modulus modulus;
  DomainTag domain_tag = DomainTag::plane_region;
  bool certified = true;

  Ball at(const Ball& param, Precision k) const { return eval(param, std::max<Precision>(k, 0)); }
  Ball at_point(const RationalPoint& p, Precision k) const { return at(Ball(p), k); }
};

// Real-valued map on circle parameters or an interval; used for Dirichlet
// boundary data. Same contract as MapName with intervals instead of balls.
struct RealMap {
  std::function<RInterval(const RInterval&, Precision)> eval;
  Modulus modulus;

  RInterval at(const RInterval& param, Precision k) const {
    return eval(param, std::max<Precision>(k, 0));
  }
  RInterval at_point(const Rational& t, Precision k) const { return at(RInterval(t), k); }
};

inline RealMap constant_real_map(const Rational& c) {
  return RealMap{[c](const RInterval&, Precision) { return RInterval(c); },
                 Modulus([](long) { return 0L; })};
}

// Oscillation bound over a parameter window of the given width, derived from
// a modulus alone: splitting the window into ceil(width * 2^m(j)) pieces of
// modulus scale gives osc <= ceil(width * 2^m(j)) * 2^-j for every j; take the
// best j. Always sound, no global range bound needed.
inline Rational osc_bound(const Modulus& m, const Rational& width, long depth_cap = 96) {
  if (sgn(width) <= 0) return Rational(0);
  Rational best = Rational(scaled_ceil(width * pow2(m(0)), 0));
  for (long j = 1; j <= depth_cap; ++j) {
    Rational cand = Rational(scaled_ceil(width * pow2(m(j)), 0)) * pow2(-j);
    if (cand < best) best = cand;
    // past the single-piece scale the candidate only grows again
    if (pow2(-m(j)) < width && cand > best) break;
  }
  return best;
}

}  // namespace carext

#endif
