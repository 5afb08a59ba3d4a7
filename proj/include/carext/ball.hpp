/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_BALL_HPP
#define CAREXT_BALL_HPP

#include <optional>
#include <string>
#include <utility>

#include "carext/rational.hpp"

namespace carext {

// A point of Q[i]: the exact complex scalar everything is built from.
struct RationalPoint {
  Rational re, im;

  RationalPoint() : re(0), im(0) {}
  RationalPoint(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  RationalPoint operator+(const RationalPoint& o) const { return {re + o.re, im + o.im}; }
  RationalPoint operator-(const RationalPoint& o) const { return {re - o.re, im - o.im}; }
  RationalPoint operator-() const { return {-re, -im}; }
  RationalPoint operator*(const RationalPoint& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RationalPoint operator*(const Rational& s) const { return {re * s, im * s}; }
  RationalPoint conj() const { return {re, -im}; }
  bool operator==(const RationalPoint& o) const { return re == o.re && im == o.im; }
  bool operator!=(const RationalPoint& o) const { return !(*this == o); }

  Rational norm_sq() const { return re * re + im * im; }
};

inline Rational dist_sq(const RationalPoint& a, const RationalPoint& b) {
  return (a - b).norm_sq();
}

// Exact rational upper/lower bounds on |p|.
inline Rational abs_upper(const RationalPoint& p, long bits = 48) {
  return sqrt_upper(p.norm_sq(), bits);
}
inline Rational abs_lower(const RationalPoint& p, long bits = 48) {
  return sqrt_lower(p.norm_sq(), bits);
}

// ---------------------------------------------------------------------------
// Ball: rational-center rational-radius enclosure of a complex number. The
// universal output of every approximation in the engine.
// ---------------------------------------------------------------------------
struct Ball {
  RationalPoint center;
  Rational radius;

  Ball() : radius(0) {}
  explicit Ball(RationalPoint c) : center(std::move(c)), radius(0) {}
  Ball(RationalPoint c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    if (sgn(radius) < 0) fail(errc::domain_error, "ball with negative radius");
  }

  bool is_point() const { return sgn(radius) == 0; }

  // Exact membership test.
  bool contains(const RationalPoint& p) const {
    return dist_sq(center, p) <= radius * radius;
  }
  // a contains b as sets (exact: |ca-cb| + rb <= ra, compared squared).
  bool contains(const Ball& b) const {
    Rational slack = radius - b.radius;
    if (sgn(slack) < 0) return false;
    return dist_sq(center, b.center) <= slack * slack;
  }
  bool intersects(const Ball& b) const {
    Rational s = radius + b.radius;
    return dist_sq(center, b.center) <= s * s;
  }

  Ball inflated(const Rational& extra) const { return Ball(center, radius + extra); }

  // Round the center to dyadics at 2^-bits, pushing the motion into the radius.
  Ball rounded(long bits) const {
    RationalPoint c(dyadic_round(center.re, bits), dyadic_round(center.im, bits));
    // center moved by at most 2^-bits in each coordinate
    return Ball(c, dyadic_ceil(radius + pow2(-bits) * 2, bits + 4));
  }

  RInterval re_interval() const { return RInterval(center.re - radius, center.re + radius); }
  RInterval im_interval() const { return RInterval(center.im - radius, center.im + radius); }
};

inline Ball ball_add(const Ball& a, const Ball& b) {
  return Ball(a.center + b.center, a.radius + b.radius);
}

inline Ball ball_sub(const Ball& a, const Ball& b) {
  return Ball(a.center - b.center, a.radius + b.radius);
}

inline Ball ball_neg(const Ball& a) { return Ball(-a.center, a.radius); }

// Product enclosure with radius |c1| r2 + |c2| r1 + r1 r2; the center moduli
// enter through exact rational upper bounds.
inline Ball ball_mul(const Ball& a, const Ball& b) {
  RationalPoint c = a.center * b.center;
  Rational r = abs_upper(a.center) * b.radius + abs_upper(b.center) * a.radius +
               a.radius * b.radius;
  return Ball(std::move(c), std::move(r));
}

inline Ball ball_scale(const Ball& a, const Rational& s) {
  return Ball(a.center * s, a.radius * rat_abs(s));
}

inline Ball ball_scale(const Ball& a, const RationalPoint& s) {
  return ball_mul(a, Ball(s));
}

// Inversion 1/B. A disk avoiding the origin maps to a disk under z -> 1/z,
// with rational center and radius:
//   center' = conj(c) / (|c|^2 - r^2),  radius' = r / (|c|^2 - r^2).
inline Ball ball_recip(const Ball& a) {
  Rational d = a.center.norm_sq() - a.radius * a.radius;
  if (sgn(d) <= 0) fail(errc::domain_error, "reciprocal of a ball containing zero");
  return Ball(a.center.conj() * (Rational(1) / d), a.radius / d);
}

inline Ball ball_div(const Ball& a, const Ball& b) { return ball_mul(a, ball_recip(b)); }

// Positive rational lower bound on inf |x - y| over members, or nullopt when
// the balls may intersect. All comparisons run on squared distances.
inline std::optional<Rational> ball_sep(const Ball& a, const Ball& b, long bits = 48) {
  Rational rsum = a.radius + b.radius;
  Rational dsq = dist_sq(a.center, b.center);
  if (dsq <= rsum * rsum) return std::nullopt;  // overlap (touching counts)
  // Raise the sqrt precision until the directed bound clears the radii; the
  // strict squared comparison above guarantees this terminates.
  for (long p = bits; p <= bits + 512; p *= 2) {
    Rational dlo = sqrt_lower(dsq, p);
    Rational gap = dlo - rsum;
    if (sgn(gap) > 0) return gap;
  }
  return std::nullopt;  // unreachable for sane inputs
}

inline Ball ball_hull(const Ball& a, const Ball& b) {
  // Smallest-ish ball containing both: midpoint construction with an exact
  // upper bound on the needed radius.
  RationalPoint c((a.center.re + b.center.re) / 2, (a.center.im + b.center.im) / 2);
  Rational half = abs_upper(a.center - b.center) / 2;
  return Ball(c, half + std::max(a.radius, b.radius));
}

inline std::string ball_str(const Ball& b) {
  return "(" + rat_str(b.center.re) + ", " + rat_str(b.center.im) + ") +- " + rat_str(b.radius);
}

}  // namespace carext

#endif
