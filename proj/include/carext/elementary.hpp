/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_ELEMENTARY_HPP
#define CAREXT_ELEMENTARY_HPP

#include <map>
#include <mutex>

#include "carext/ball.hpp"
#include "carext/rational.hpp"

// Validated enclosures of the few transcendental quantities the engine needs:
// pi, sin/cos of full turns, arctan, log. Everything is computed from
// alternating or geometric-tailed series with exact rational partial sums and
// directed tail bounds; intermediate values are rounded outward to dyadics so
// denominators stay bounded.

namespace carext {

namespace detail {

// atan(u) for 0 <= u <= 1/2 by the alternating Taylor series. Terms decrease
// monotonically there, so the first omitted term bounds the tail.
inline RInterval atan_series(const Rational& u, long bits) {
  long work = bits + 16;
  Rational x = dyadic_floor(u, work);        // x <= u <= x + 2^-work
  Rational usq = dyadic_ceil(x * x, work);   // upper bound keeps tail bound valid
  Rational term = x;
  Rational sum = 0;
  Rational tail_gap(1);
  int j = 0;
  while (true) {
    sum += (j % 2 == 0 ? term : Rational(-term)) / Rational(2 * j + 1);
    sum = dyadic_round(sum, work + 8);
    term = dyadic_ceil(term * usq, work + 8);
    ++j;
    if (term <= pow2(-(bits + 4)) || j > 4 * bits + 64) {
      tail_gap = term;
      break;
    }
  }
  // rounding slop: <= (j+2) ulps at work+8, plus Lipschitz slack for the
  // initial floor of u (|atan'| <= 1)
  Rational slop = Rational(j + 2) * pow2(-(work + 8)) + pow2(-work);
  return RInterval(sum - tail_gap / Rational(2 * j + 1) - slop,
                   sum + tail_gap / Rational(2 * j + 1) + slop);
}

}  // namespace detail

// Enclosure of pi via Machin's formula 16 atan(1/5) - 4 atan(1/239).
inline RInterval pi_interval(long bits) {
  static std::mutex mu;
  static std::map<long, RInterval> cache;
  long key = std::max<long>(bits, 32);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.lower_bound(key);
    if (it != cache.end()) return it->second.rounded(key);
  }
  RInterval a = detail::atan_series(Rational(1, 5), key + 8);
  RInterval b = detail::atan_series(Rational(1, 239), key + 8);
  RInterval pi = (a * Rational(16) - b * Rational(4)).rounded(key);
  {
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = pi;
  }
  return pi;
}

// atan over the whole line. Uses atan(x) = pi/2 - atan(1/x) for x > 1 and one
// argument-halving step atan(x) = 2 atan(x / (1 + sqrt(1 + x^2))) to reach the
// series range.
inline RInterval atan_point(const Rational& x, long bits) {
  if (sgn(x) < 0) return -atan_point(-x, bits);
  if (x <= Rational(1, 2)) return detail::atan_series(x, bits);
  if (x > 1) {
    RInterval half_pi = pi_interval(bits + 4) * Rational(1, 2);
    return half_pi - atan_point(Rational(1) / x, bits + 2);
  }
  // 1/2 < x <= 1: halve once; the reduced argument is <= 1/2.
  RInterval root = interval_sqrt(RInterval(x * x + 1), bits + 8);
  RInterval reduced = RInterval(x) / (root + Rational(1));
  RInterval lo = detail::atan_series(reduced.lo, bits + 4);
  RInterval hi = detail::atan_series(reduced.hi, bits + 4);
  return RInterval(lo.lo * 2, hi.hi * 2);
}

inline RInterval atan_interval(const RInterval& x, long bits) {
  // atan is increasing.
  RInterval a = atan_point(x.lo, bits), b = atan_point(x.hi, bits);
  return RInterval(a.lo, b.hi);
}

namespace detail {

// sin(w) and cos(w) for an exact dyadic w in [0, 0.8]; alternating series.
inline RInterval sin_series(const Rational& w, long bits) {
  long work = bits + 16;
  Rational wsq = dyadic_ceil(w * w, work);
  Rational term = dyadic_ceil(w, work);
  Rational sum = 0;
  int j = 0;
  while (true) {
    sum += (j % 2 == 0 ? term : Rational(-term));
    sum = dyadic_round(sum, work + 8);
    term = dyadic_ceil(term * wsq, work + 8) / Rational((2 * j + 2) * (2 * j + 3));
    term = dyadic_ceil(term, work + 8);
    ++j;
    if (term <= pow2(-(bits + 4)) || j > bits + 64) break;
  }
  Rational slop = term + Rational(j + 2) * pow2(-(work + 8)) + pow2(-work);
  return RInterval(sum - slop, sum + slop);
}

inline RInterval cos_series(const Rational& w, long bits) {
  long work = bits + 16;
  Rational wsq = dyadic_ceil(w * w, work);
  Rational term = 1;
  Rational sum = 0;
  int j = 0;
  while (true) {
    sum += (j % 2 == 0 ? term : Rational(-term));
    sum = dyadic_round(sum, work + 8);
    term = dyadic_ceil(term * wsq, work + 8) / Rational((2 * j + 1) * (2 * j + 2));
    term = dyadic_ceil(term, work + 8);
    ++j;
    if (term <= pow2(-(bits + 4)) || j > bits + 64) break;
  }
  Rational slop = term + Rational(j + 2) * pow2(-(work + 8)) + pow2(-work);
  return RInterval(sum - slop, sum + slop);
}

// sin(2 pi z), cos(2 pi z) for exact rational z in [0, 1/8].
inline void sincos_octant(const Rational& z, long bits, RInterval& s, RInterval& c) {
  if (sgn(z) == 0) {  // quarter-turn multiples reduce here exactly
    s = RInterval(Rational(0));
    c = RInterval(Rational(1));
    return;
  }
  RInterval w = pi_interval(bits + 8) * (z * 2);
  w = w.rounded(bits + 12);
  // w subset [0, pi/4]: sin increasing, cos decreasing there
  RInterval slo = sin_series(w.lo, bits + 4), shi = sin_series(w.hi, bits + 4);
  RInterval clo = cos_series(w.hi, bits + 4), chi = cos_series(w.lo, bits + 4);
  s = RInterval(slo.lo, shi.hi);
  c = RInterval(clo.lo, chi.hi);
}

}  // namespace detail

// sin(2 pi x) and cos(2 pi x) for exact rational x; the parameter is a number
// of turns, so range reduction is exact rational arithmetic.
inline void sincospi2(const Rational& x, long bits, RInterval& s, RInterval& c) {
  Rational y = x - Rational(scaled_floor(x, 0));  // y in [0,1)
  bool negate_both = false, swap_sc = false, negate_cos = false;
  if (y >= Rational(1, 2)) {  // sin/cos(theta - pi) = -sin/cos(theta)
    y -= Rational(1, 2);
    negate_both = true;
  }
  if (y > Rational(1, 4)) {  // reflect around pi/2
    y = Rational(1, 2) - y;
    negate_cos = true;
  }
  if (y > Rational(1, 8)) {  // complement to pi/2
    y = Rational(1, 4) - y;
    swap_sc = true;
  }
  detail::sincos_octant(y, bits, s, c);
  if (swap_sc) std::swap(s, c);
  if (negate_cos) c = -c;
  if (negate_both) {
    s = -s;
    c = -c;
  }
}

inline RInterval sinpi2(const Rational& x, long bits) {
  RInterval s, c;
  sincospi2(x, bits, s, c);
  return s;
}

inline RInterval cospi2(const Rational& x, long bits) {
  RInterval s, c;
  sincospi2(x, bits, s, c);
  return c;
}

// Enclosure of the unit-circle point e^{2 pi i t}.
inline Ball circle_point(const Rational& t, long bits) {
  RInterval s, c;
  sincospi2(t, bits, s, c);
  RationalPoint center(c.mid(), s.mid());
  Rational r = std::max(c.width(), s.width());  // box half-diagonal bound below
  return Ball(center, sqrt_upper(r * r * 2, bits + 4) / 2);
}

// Interval-argument wrappers; widths propagate via |d/dt sin(2 pi t)| <= 2 pi <= 7.
inline RInterval sinpi2(const RInterval& t, long bits) {
  if (t.width() >= Rational(1, 4)) return RInterval(Rational(-1), Rational(1));
  RInterval base = sinpi2(t.mid(), bits);
  Rational spread = t.width() * Rational(7, 2);
  Rational lo = base.lo - spread, hi = base.hi + spread;
  return RInterval(std::max(Rational(-1), lo), std::min(Rational(1), hi));
}

inline RInterval cospi2(const RInterval& t, long bits) {
  if (t.width() >= Rational(1, 4)) return RInterval(Rational(-1), Rational(1));
  RInterval base = cospi2(t.mid(), bits);
  Rational spread = t.width() * Rational(7, 2);
  Rational lo = base.lo - spread, hi = base.hi + spread;
  return RInterval(std::max(Rational(-1), lo), std::min(Rational(1), hi));
}

// Natural log enclosure; q = m 2^n with m in [1,2), log m = 2 atanh((m-1)/(m+1)).
inline RInterval log_interval(const Rational& q, long bits) {
  if (sgn(q) <= 0) fail(errc::domain_error, "log of a non-positive rational");
  static std::mutex mu;
  static std::map<long, RInterval> log2_cache;

  long work = bits + 16;
  auto atanh_small = [&](const Rational& u) {  // 0 <= u <= 1/3, directed
    Rational x = dyadic_floor(u, work);
    Rational usq = dyadic_ceil(x * x, work);
    Rational term = x, sum = 0;
    int j = 0;
    while (true) {
      sum += term / Rational(2 * j + 1);
      sum = dyadic_round(sum, work + 8);
      term = dyadic_ceil(term * usq, work + 8);
      ++j;
      if (term <= pow2(-(bits + 6)) || j > 2 * bits + 64) break;
    }
    // tail of the positive series is <= term/(2j+1) * 1/(1-u^2) <= term * 9/8 / (2j+1)
    Rational tail = term * Rational(9, 8) / Rational(2 * j + 1);
    Rational slop = Rational(j + 2) * pow2(-(work + 8)) + pow2(-work) * Rational(2);
    return RInterval(sum - slop, sum + tail + slop) * Rational(2);
  };

  RInterval log2;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = log2_cache.lower_bound(work);
    if (it != log2_cache.end()) {
      log2 = it->second;
    } else {
      log2 = atanh_small(Rational(1, 3));
      log2_cache[work] = log2;
    }
  }

  long n = ilog2_lower(q);
  Rational m = q * pow2(-n);  // in [1,2)
  RInterval logm = atanh_small((m - 1) / (m + 1));
  return (log2 * Rational(n) + logm).rounded(bits);
}

// Angle of p as a fraction of a full turn, in (-1/2, 1/2]. p must avoid 0.
inline RInterval atan2_turns(const RationalPoint& p, long bits) {
  if (sgn(p.re) == 0 && sgn(p.im) == 0)
    fail(errc::domain_error, "angle of the origin");
  RInterval inv_two_pi = (pi_interval(bits + 8) * Rational(2)).recip();
  if (sgn(p.re) > 0) {
    if (sgn(p.im) == 0) return RInterval(Rational(0));
    return (atan_point(p.im / p.re, bits + 4) * inv_two_pi).rounded(bits);
  }
  if (sgn(p.re) == 0)
    return RInterval(Rational(sgn(p.im) > 0 ? 1 : -1, 4));
  // p.re < 0: shift by half a turn toward the sign of im (im == 0 -> +1/2)
  Rational shift(sgn(p.im) >= 0 ? 1 : -1, 2);
  return ((atan_point(p.im / p.re, bits + 4) * inv_two_pi) + shift).rounded(bits);
}

// Angle enclosure (in turns) of every point of a ball not containing 0.
// Uses asin(x) <= pi x / 2, i.e. deviation in turns <= ratio / 4.
inline RInterval atan2_turns(const Ball& b, long bits) {
  Rational lb = abs_lower(b.center, bits + 4);
  if (lb <= b.radius) fail(errc::domain_error, "angle of a ball reaching the origin");
  RInterval base = atan2_turns(b.center, bits);
  Rational dev = b.radius / (lb * 4) + pow2(-bits);
  return RInterval(base.lo - dev, base.hi + dev);
}

// Circle-parameter distance on [0,1) with wraparound: min(|s-t|, 1-|s-t|).
inline Rational circle_dist(const Rational& s, const Rational& t) {
  Rational d = rat_abs(s - t);
  d = d - Rational(scaled_floor(d, 0));
  Rational e = Rational(1) - d;
  return std::min(d, e);
}

}  // namespace carext

#endif
