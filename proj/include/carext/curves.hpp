/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_CURVES_HPP
#define CAREXT_CURVES_HPP

#include <memory>
#include <optional>
#include <queue>
#include <vector>

#include "carext/geometry.hpp"
#include "carext/oracle.hpp"

// Jordan-curve oracles, rational polygonal approximation sequences, and local
// connectivity witnesses. Curve parameters live on [0,1) with the wraparound
// metric, standing in for the unit circle; built-in instances apply the
// exponential map internally.

namespace carext {

// A Jordan curve named by a parameterization oracle. Injectivity is declared,
// not checked; adversarial oracles surface as certification failures
// downstream. Analytic instances may declare an inverse modulus (a valid m1
// with |f(s)-f(t)| <= 2^-m1(k) implying circle-distance(s,t) <= 2^-k), which
// spares the grid search at depths the search could never reach.
struct JordanCurveName {
  MapName param;  // domain_tag unit_circle_params
  std::optional<Modulus> declared_inverse_modulus;

  Ball at(const Rational& t, Precision k) const { return param.at_point(RationalPoint(t, Rational(0)), k); }
};

// Convenience: evaluate the curve over a parameter interval as one enclosure.
inline Ball curve_hull(const JordanCurveName& J, const Rational& lo, const Rational& hi,
                       Precision k) {
  Rational mid = (lo + hi) / 2;
  Ball b = J.at(mid, k);
  Rational spread = osc_bound(J.param.modulus, (hi - lo) / 2);
  return b.inflated(spread);
}

struct Witness {
  Modulus h;
};

struct PolygonalApproxSequence {
  std::function<RationalPolygonalPath(long)> at;
};

// ---------------------------------------------------------------------------
// CurveTree: lazy binary tree of parameter intervals with cached hull
// enclosures. Supports certified "the whole curve stays further than d from
// z" queries without materializing deep polygonal approximants.
// ---------------------------------------------------------------------------
class CurveTree {
 public:
  explicit CurveTree(JordanCurveName curve) : curve_(std::move(curve)) {
    root_ = std::make_unique<Node>();
    root_->lo = Rational(0);
    root_->hi = Rational(1);
  }

  const JordanCurveName& curve() const { return curve_; }

  // Certified dist(z, J) > d. Returns false when certification fails within
  // the depth cap (callers treat that as "not certifiably clear").
  bool dist_exceeds(const RationalPoint& z, const Rational& d, long depth_cap = 400) {
    return subtree_clear(*root_, z, d, depth_cap);
  }

  // Certified lower bound on dist(z, J), at resolution 2^-bits; 0 when z may
  // touch the curve.
  Rational dist_lower_bound(const RationalPoint& z, long bits) {
    Rational lo(0), hi(4);
    // crude upper: distance to one sample
    Ball s = hull(*root_, 4);
    hi = abs_upper(z - s.center) + s.radius;
    while (hi - lo > pow2(-bits)) {
      Rational mid = (lo + hi) / 2;
      if (dist_exceeds(z, mid))
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

 private:
  struct Node {
    Rational lo, hi;
    std::optional<Ball> hull;
    long hull_bits = 0;
    std::unique_ptr<Node> left, right;
  };

  Ball hull(Node& n, long bits) {
    if (!n.hull || n.hull_bits < bits) {
      Rational mid = (n.lo + n.hi) / 2;
      Ball b = curve_.at(mid, bits);
      Rational spread = osc_bound(curve_.param.modulus, (n.hi - n.lo) / 2);
      Ball h = b.inflated(spread).rounded(bits + 8);
      if (n.hull && n.hull_bits >= bits) return *n.hull;
      n.hull = h;
      n.hull_bits = bits;
    }
    return *n.hull;
  }

  bool subtree_clear(Node& n, const RationalPoint& z, const Rational& d, long depth_left) {
    long want = std::max<long>(8, 4 - ilog2_lower(d + pow2(-200)));
    Ball h = hull(n, want);
    // far test: |z - c| > d + r, squared
    Rational thresh = d + h.radius;
    if (dist_sq(z, h.center) > thresh * thresh) return true;
    if (depth_left <= 0) return false;
    // try a tighter hull before splitting if the spread dominates
    if (!n.left) {
      Rational mid = (n.lo + n.hi) / 2;
      n.left = std::make_unique<Node>();
      n.left->lo = n.lo;
      n.left->hi = mid;
      n.right = std::make_unique<Node>();
      n.right->lo = mid;
      n.right->hi = n.hi;
    }
    return subtree_clear(*n.left, z, d, depth_left - 1) &&
           subtree_clear(*n.right, z, d, depth_left - 1);
  }

  JordanCurveName curve_;
  std::unique_ptr<Node> root_;
};

// ---------------------------------------------------------------------------
// inverse_modulus: certified m1(k) from exhaustive minimization of
// |f(s) - f(t)| over the 2^-(m(k)+2) grid of parameter pairs at
// circle-distance >= 2^-k. The flat grid is exhausted hierarchically:
// interval-pair blocks are discarded once their hull separation already
// exceeds the current floor, which never changes the minimum.
// ---------------------------------------------------------------------------
namespace detail {

struct PairBlock {
  // grid index ranges [a0, a1] x [b0, b1], inclusive
  long a0, a1, b0, b1;
  Rational bound;  // certified lower bound on min |f(ia g) - f(ib g)| within

  bool singleton() const { return a0 == a1 && b0 == b1; }
  bool operator<(const PairBlock& o) const {
    if (bound != o.bound) return bound > o.bound;  // min-heap by bound
    if (a0 != o.a0) return a0 > o.a0;
    return b0 > o.b0;
  }
};

// Can some index pair in the block be at circle distance >= D (grid step g)?
inline bool block_feasible(const PairBlock& blk, const Rational& g, const Rational& D) {
  Rational dlo = (Rational(blk.b0) - Rational(blk.a1)) * g;
  Rational dhi = (Rational(blk.b1) - Rational(blk.a0)) * g;
  // delta ranges over [dlo, dhi]; circle_dist(delta) peaks at half-integers
  Rational half(1, 2);
  Integer lo_ceil = scaled_ceil(dlo - half, 0);
  Rational cand = Rational(lo_ceil) + half;  // smallest half-integer >= dlo
  if (cand <= dhi) return half >= D;
  Rational m1 = circle_dist(dlo - Rational(scaled_floor(dlo, 0)), Rational(0));
  Rational m2 = circle_dist(dhi - Rational(scaled_floor(dhi, 0)), Rational(0));
  return std::max(m1, m2) >= D;
}

}  // namespace detail

inline long inverse_modulus(const JordanCurveName& J, long k, long precision_cap = 96) {
  const Modulus& m = J.param.modulus;
  long G = std::max(m(k) + 2, k + 2);
  if (G > 40) fail(errc::cap_exceeded, "inverse-modulus grid deeper than supported");
  Rational g = pow2(-G);
  long N = 1L << G;
  Rational D = pow2(-k);
  Rational slack = osc_bound(m, g) * 3;

  // Hull of the grid points in index range [a, b] (parameters a*g .. b*g).
  std::map<std::pair<long, long>, Ball> hull_memo;
  auto range_hull = [&](long a, long b, long bits) {
    auto key = std::make_pair(a, b);
    auto it = hull_memo.find(key);
    if (it != hull_memo.end()) return it->second;
    Rational lo = Rational(a) * g, hi = Rational(b) * g;
    Ball h = curve_hull(J, lo, hi, bits);
    hull_memo.emplace(key, h);
    return h;
  };

  std::priority_queue<detail::PairBlock> queue;
  auto push_block = [&](long a0, long a1, long b0, long b1) {
    detail::PairBlock blk{a0, a1, b0, b1, Rational(0)};
    if (!detail::block_feasible(blk, g, D)) return;
    long bits = std::max<long>(8, k + 4);
    Ball ha = range_hull(a0, a1, bits), hb = range_hull(b0, b1, bits);
    auto sep = ball_sep(ha, hb);
    blk.bound = sep ? *sep : Rational(0);
    queue.push(std::move(blk));
  };

  // initial coarse tiling (8x8 of the index square, i <= j half)
  long tiles = std::min<long>(8, N);
  long step = N / tiles;
  for (long i = 0; i < tiles; ++i)
    for (long j = i; j < tiles; ++j)
      push_block(i * step, (i + 1) * step - 1, j * step, (j + 1) * step - 1);

  long work = 0;
  const long work_cap = 2'000'000;
  while (!queue.empty()) {
    detail::PairBlock top = queue.top();
    if (top.bound > slack) {
      // min-heap: every feasible pair is separated by more than the slack
      Rational gap = top.bound - slack;
      long e = ilog2_lower(gap);
      long c = (pow2(e) < gap) ? -e : -e + 1;  // least c with 2^-c < gap
      return std::max<long>(0, c);
    }
    queue.pop();
    if (++work > work_cap)
      fail(errc::injectivity_resolution_exceeded,
           "inverse-modulus search exceeded its work cap");
    if (top.singleton()) {
      // evaluate the pair at escalating precision until separation certifies
      Rational sa = Rational(top.a0) * g, sb = Rational(top.b0) * g;
      if (circle_dist(sa, sb) < D) continue;  // infeasible singleton
      bool ok = false;
      for (long bits = k + 6; bits <= precision_cap; bits += std::max<long>(8, bits / 2)) {
        Ball ba = J.at(sa, bits), bb = J.at(sb, bits);
        auto sep = ball_sep(ba, bb);
        if (sep && *sep > slack) {
          top.bound = *sep;
          queue.push(top);
          ok = true;
          break;
        }
      }
      if (!ok)
        fail(errc::injectivity_resolution_exceeded,
             "grid pair separation failed to certify at any precision up to the cap");
      continue;
    }
    // split the longer index side
    if (top.a1 - top.a0 >= top.b1 - top.b0) {
      long mid = (top.a0 + top.a1) / 2;
      push_block(top.a0, mid, top.b0, top.b1);
      push_block(mid + 1, top.a1, top.b0, top.b1);
    } else {
      long mid = (top.b0 + top.b1) / 2;
      push_block(top.a0, top.a1, top.b0, mid);
      push_block(top.a0, top.a1, mid + 1, top.b1);
    }
  }
  fail(errc::no_zero, "inverse-modulus: feasible pair set was empty");
}

// Modulus wrapper around the search (or the declared analytic inverse
// modulus when the curve carries one).
inline Modulus inverse_modulus_fn(const JordanCurveName& J) {
  if (J.declared_inverse_modulus) return *J.declared_inverse_modulus;
  return Modulus([J](long k) { return inverse_modulus(J, k); });
}

// Local connectivity witness h = m1 . m (Witness containment property: for
// each k and curve point w1, the arc C of parameter halfwidth 2^-m(k) through
// w1 satisfies  J cap D(w1, 2^-h(k)) subset C subset D(w1, 2^-k)).
inline Witness lc_witness(const JordanCurveName& J) {
  return Witness{compose_moduli(inverse_modulus_fn(J), J.param.modulus)};
}

// ---------------------------------------------------------------------------
// polygonal_approx: closed simple rational polygonal P_t with certified
// sup-norm distance below 2^-t, built from curve samples at modulus spacing.
// ---------------------------------------------------------------------------
inline RationalPolygonalPath polygonal_approx(const JordanCurveName& J, long t) {
  const Modulus& m = J.param.modulus;
  long me = std::max(m(t + 2), t + 2);
  if (me > 18) fail(errc::cap_exceeded, "polygonal approximant would need 2^" +
                                            std::to_string(me) + " vertices");
  long N = 1L << me;
  Rational g = pow2(-me);
  long eval_bits = t + 5;

  std::vector<Rational> bp(static_cast<size_t>(N) + 1);
  std::vector<RationalPoint> vs(static_cast<size_t>(N) + 1);
  Rational vertex_err(0);  // max certified |v_i - f(i g)|
  for (long i = 0; i < N; ++i) {
    Rational ti = Rational(i) * g;
    Ball b = J.at(ti, eval_bits);
    RationalPoint v(dyadic_round(b.center.re, eval_bits), dyadic_round(b.center.im, eval_bits));
    bp[static_cast<size_t>(i)] = ti;
    vs[static_cast<size_t>(i)] = v;
    Rational err = abs_upper(v - b.center) + b.radius;
    if (err > vertex_err) vertex_err = err;
  }
  bp[static_cast<size_t>(N)] = Rational(1);
  vs[static_cast<size_t>(N)] = vs[0];

  RationalPolygonalPath P(bp, vs, true);

  // simplicity repair: deterministic local perturbation within 2^-(t+4)
  Rational budget = pow2(-t - 4);
  int attempts = 0;
  while (!path_is_simple(P) && attempts < 8) {
    ++attempts;
    // nudge every other vertex outward along a fixed offset pattern
    for (size_t i = 1; i + 1 < P.vertices.size(); i += 2) {
      Rational dx = budget * Rational((attempts % 2) ? 1 : -1, 2 * attempts);
      Rational dy = budget * Rational((i % 4 == 1) ? 1 : -1, 2 * attempts);
      P.vertices[i] = P.vertices[i] + RationalPoint(dx, dy);
    }
    P.vertices.back() = P.vertices.front();
  }
  if (!path_is_simple(P))
    fail(errc::approximation_too_coarse,
         "self-intersection of P_" + std::to_string(t) + " not repairable in budget");
  Rational perturb = attempts > 0 ? budget : Rational(0);

  // certified sup bound: vertex error + oscillation over one piece + repair
  Rational U = vertex_err + osc_bound(m, g) + perturb;
  if (!(U < pow2(-t)))
    fail(errc::approximation_too_coarse, "certified sup bound misses 2^-t");
  return P;
}

// Certified upper bound on sup_x |P(x) - f(x)| against the curve oracle
// (sampling at modulus scale; exact piecewise-linear Lipschitz term for P).
inline Rational curve_sup_dist(const RationalPolygonalPath& P, const JordanCurveName& J,
                               long t_scale) {
  const Modulus& m = J.param.modulus;
  long me = std::max(m(t_scale + 2), t_scale + 2);
  me = std::min<long>(me, 18);
  long N = 1L << me;
  Rational g = pow2(-me);
  // exact Lipschitz bound of P per unit parameter
  Rational lip(0);
  for (size_t i = 0; i + 1 < P.breakpoints.size(); ++i) {
    Rational len = abs_upper(P.vertices[i + 1] - P.vertices[i]);
    Rational per = len / (P.breakpoints[i + 1] - P.breakpoints[i]);
    if (per > lip) lip = per;
  }
  Rational worst(0);
  for (long i = 0; i < N; ++i) {
    Rational ti = Rational(i) * g;
    Ball b = J.at(ti, t_scale + 6);
    Rational d = abs_upper(path_eval(P, ti) - b.center) + b.radius;
    if (d > worst) worst = d;
  }
  return worst + osc_bound(m, g) + lip * g;
}

inline PolygonalApproxSequence make_polygonal_seq(const JordanCurveName& J) {
  auto memo = std::make_shared<std::map<long, RationalPolygonalPath>>();
  auto mu = std::make_shared<std::mutex>();
  return PolygonalApproxSequence{[J, memo, mu](long t) {
    std::lock_guard<std::mutex> lock(*mu);
    auto it = memo->find(t);
    if (it != memo->end()) return it->second;
    RationalPolygonalPath P = polygonal_approx(J, t);
    (*memo)[t] = P;
    return P;
  }};
}

}  // namespace carext

#endif
