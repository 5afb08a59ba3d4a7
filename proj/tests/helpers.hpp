/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_TESTS_HELPERS_HPP
#define CAREXT_TESTS_HELPERS_HPP

#include <cmath>
#include <random>

#include "carext/ball.hpp"

// Deterministic sampling helpers shared by the suites. mt19937 with a fixed
// seed is fully specified by the standard, so sampled expectations are stable
// across platforms; distributions are hand-rolled on raw draws for the same
// reason.

namespace carext_tests {

using carext::Ball;
using carext::Rational;
using carext::RationalPoint;

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  // uniform dyadic rational in [-1, 1] with denominator 2^12
  Rational unit() {
    long v = static_cast<long>(rng_() % 8193) - 4096;
    Rational q(v, 4096);
    q.canonicalize();
    return q;
  }

  // uniform dyadic rational in [0, 1)
  Rational unit01() {
    long v = static_cast<long>(rng_() % 4096);
    Rational q(v, 4096);
    q.canonicalize();
    return q;
  }

  RationalPoint point_in_square(const Rational& half_side) {
    return RationalPoint(unit() * half_side, unit() * half_side);
  }

  // exact member of a ball: center + radius * (u, v) with u^2 + v^2 <= 1
  RationalPoint member_of(const Ball& b) {
    while (true) {
      Rational u = unit(), v = unit();
      if (u * u + v * v <= 1)
        return b.center + RationalPoint(u * b.radius, v * b.radius);
    }
  }

  unsigned raw() { return rng_(); }

 private:
  std::mt19937 rng_;
};

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

inline double width_of(const carext::RInterval& iv) { return to_double(iv.width()); }

inline bool encloses(const carext::RInterval& iv, double x, double slack = 0.0) {
  return to_double(iv.lo) - slack <= x && x <= to_double(iv.hi) + slack;
}

}  // namespace carext_tests

#endif
