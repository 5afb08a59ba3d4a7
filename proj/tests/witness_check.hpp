/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_TESTS_WITNESS_CHECK_HPP
#define CAREXT_TESTS_WITNESS_CHECK_HPP

#include "carext/curves.hpp"

// Brute-force verification of the local-connectivity witness contract on a
// concrete curve: for the arc C = f[(t1 - 2^-m(k), t1 + 2^-m(k))] through
// w1 = f(t1),
//   (a) C lies inside D(w1, 2^-k):   dense samples of C certify strict
//       containment including between-sample oscillation;
//   (b) J cap D(w1, 2^-h(k)) lies inside C: a sample outside the parameter
//       interval whose enclosure is certified inside the small disk would be
//       a violation.
// Both checks use exact comparisons against ball enclosures only.

namespace carext_tests {

using namespace carext;

inline bool witness_containment_holds(const JordanCurveName& J, const Witness& W, long k,
                                      const Rational& t1) {
  const Modulus& m = J.param.modulus;
  long hk = W.h(k), mk = m(k);
  Rational halfwidth = pow2(-mk);
  long bits = std::max<long>(hk + 6, k + 6);
  Ball w1 = J.at(t1, bits);

  // (a) inner samples: |f(s) - w1| + slack < 2^-k
  {
    long steps = 32;
    Rational spacing = halfwidth * 2 / Rational(steps);
    Rational osc = osc_bound(m, spacing);
    for (long i = 0; i <= steps; ++i) {
      Rational s = t1 - halfwidth + spacing * Rational(i);
      Ball fs = J.at(s, bits);
      Rational ub = abs_upper(fs.center - w1.center) + fs.radius + w1.radius + osc;
      if (!(ub < pow2(-k))) return false;
    }
  }

  // (b) outer samples: certified membership in the small disk is a violation
  {
    long steps = 4096;
    for (long i = 1; i < steps; ++i) {
      Rational s = t1 + halfwidth + (Rational(1) - halfwidth * 2) * Rational(i) / Rational(steps);
      if (circle_dist(s, t1) <= halfwidth) continue;
      Ball fs = J.at(s, bits);
      Rational ub = abs_upper(fs.center - w1.center) + fs.radius + w1.radius;
      if (ub < pow2(-hk)) return false;  // certified inside: contradicts the witness
    }
  }
  return true;
}

}  // namespace carext_tests

#endif
