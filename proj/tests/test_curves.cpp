/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "carext/curves.hpp"
#include "carext/instances.hpp"
#include "helpers.hpp"
#include "witness_check.hpp"

using namespace carext;
using carext_tests::Sampler;
using carext_tests::to_double;
using carext_tests::witness_containment_holds;

namespace {

JordanCurveName circle_without_declared() {
  JordanCurveName J = unit_circle_curve();
  J.declared_inverse_modulus.reset();
  return J;
}

JordanCurveName ellipse_without_declared() {
  JordanCurveName J = ellipse_curve();
  J.declared_inverse_modulus.reset();
  return J;
}

// Validity audit of a claimed m1 at one k on an n-point grid: no pair may be
// certified |f(s)-f(t)| <= 2^-m1 while sitting at circle distance > 2^-k.
bool inverse_modulus_valid(const JordanCurveName& J, long m1, long k, long n) {
  long bits = m1 + 6;
  std::vector<Ball> vals;
  vals.reserve(n);
  for (long i = 0; i < n; ++i) vals.push_back(J.at(rat(i, n), bits));
  Rational thresh = pow2(-m1);
  Rational D = pow2(-k);
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      Rational d = circle_dist(rat(i, n), rat(j, n));
      if (d <= D) continue;
      Rational slack = vals[i].radius + vals[j].radius + thresh;
      if (dist_sq(vals[i].center, vals[j].center) <= slack * slack) {
        // may be a genuine small difference; confirm with an upper bound
        Rational ub = abs_upper(vals[i].center - vals[j].center) + vals[i].radius +
                      vals[j].radius;
        if (ub <= thresh) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("inverse_modulus on the circle is valid and at least as tight as k+1") {
  JordanCurveName J = circle_without_declared();
  for (long k = 2; k <= 6; ++k) {
    long m1 = inverse_modulus(J, k);
    CAPTURE(k, m1);
    CHECK(m1 <= k + 1);  // the analytic chord bound shows k+1 suffices
    REQUIRE(inverse_modulus_valid(J, m1, k, 1024));
  }
}

TEST_CASE("inverse_modulus is invariant under an exact quarter-turn rotation") {
  JordanCurveName J = circle_without_declared();
  JordanCurveName R = J;
  MapName base = J.param;
  R.param.eval = [base](const Ball& t, Precision k) {
    Ball b = base.eval(t, k);
    // multiply by i exactly: centers rotate, radii unchanged
    return Ball(RationalPoint(-b.center.im, b.center.re), b.radius);
  };
  for (long k = 2; k <= 4; ++k) REQUIRE(inverse_modulus(J, k) == inverse_modulus(R, k));
}

TEST_CASE("inverse_modulus on the ellipse certifies on a 4096-point grid") {
  JordanCurveName J = ellipse_without_declared();
  long k = 4;
  long m1 = inverse_modulus(J, k);
  CAPTURE(m1);
  REQUIRE(inverse_modulus_valid(J, m1, k, 4096));
}

TEST_CASE("declared inverse moduli pass the same audit") {
  REQUIRE(inverse_modulus_valid(unit_circle_curve(), std::max<long>(0, 5 - 2), 5, 1024));
  REQUIRE(inverse_modulus_valid(ellipse_curve(), std::max<long>(0, 5 - 1), 5, 1024));
}

TEST_CASE("lc_witness composes the two moduli") {
  // synthetic curve with declared m(k) = k+3 and m1(k) = k+1: h(k) = k+4
  JordanCurveName J = unit_circle_curve();
  J.declared_inverse_modulus = Modulus([](long k) { return k + 1; });
  Witness W = lc_witness(J);
  for (long k = 0; k <= 10; ++k) CHECK(W.h(k) == k + 4);
}

TEST_CASE("lc_witness with identity modulus degenerates to m1") {
  JordanCurveName J = unit_circle_curve();
  J.param.modulus = Modulus([](long k) { return k; });
  J.declared_inverse_modulus = Modulus([](long k) { return k + 1; });
  Witness W = lc_witness(J);
  for (long k = 0; k <= 10; ++k) CHECK(W.h(k) == k + 1);
}

TEST_CASE("witness containment property, sampled on circle and ellipse") {
  Sampler smp(211);
  for (const JordanCurveName& J : {unit_circle_curve(), ellipse_curve()}) {
    Witness W = lc_witness(J);
    for (int trial = 0; trial < 8; ++trial) {
      long k = 2 + static_cast<long>(smp.raw() % 4);  // k <= 5 in the unit test
      Rational t1 = smp.unit01();
      CAPTURE(k, to_double(t1));
      REQUIRE(witness_containment_holds(J, W, k, t1));
    }
  }
}

TEST_CASE("polygonal_approx on the circle: certified bound below 2^-t") {
  JordanCurveName J = unit_circle_curve();
  Rational prev(10);
  for (long t = 1; t <= 6; ++t) {
    RationalPolygonalPath P = polygonal_approx(J, t);
    REQUIRE(P.closed);
    REQUIRE(closed_polygon_simple(P));
    Rational U = curve_sup_dist(P, J, t);
    CAPTURE(t, to_double(U));
    REQUIRE(U < pow2(-t));
    REQUIRE(U < prev);
    prev = U;
  }
}

TEST_CASE("polygonal_approx on the ellipse at t = 8") {
  JordanCurveName J = ellipse_curve();
  RationalPolygonalPath P = polygonal_approx(J, 8);
  REQUIRE(closed_polygon_simple(P));
  REQUIRE(curve_sup_dist(P, J, 8) < pow2(-8));
}

TEST_CASE("polynomial curve approximants are simple") {
  JordanCurveName J = polynomial_curve(RationalPoint(Rational(1, 4), Rational(0)));
  RationalPolygonalPath P = polygonal_approx(J, 4);
  REQUIRE(closed_polygon_simple(P));
  REQUIRE(curve_sup_dist(P, J, 4) < pow2(-4));
}

TEST_CASE("CurveTree distance certificates on the circle") {
  CurveTree tree(unit_circle_curve());
  RationalPoint origin(Rational(0), Rational(0));
  CHECK(tree.dist_exceeds(origin, Rational(9, 10)));
  CHECK_FALSE(tree.dist_exceeds(origin, Rational(1)));
  CHECK(tree.dist_exceeds(RationalPoint(Rational(3), Rational(0)), Rational(3, 2)));
  CHECK_FALSE(tree.dist_exceeds(RationalPoint(Rational(1), Rational(0)), Rational(1, 100)));

  Rational lb = tree.dist_lower_bound(origin, 8);
  CHECK(lb > Rational(9, 10));
  CHECK(lb <= Rational(1));
}

TEST_CASE("curve oracle enclosures track the analytic ellipse") {
  JordanCurveName J = ellipse_curve();
  Sampler smp(223);
  for (int i = 0; i < 40; ++i) {
    Rational t = smp.unit01();
    Ball b = J.at(t, 30);
    double ang = 2.0 * M_PI * to_double(t);
    double dx = to_double(b.center.re) - std::cos(ang);
    double dy = to_double(b.center.im) - 0.5 * std::sin(ang);
    REQUIRE(std::hypot(dx, dy) <= to_double(b.radius) + 1e-9);
    REQUIRE(b.radius <= pow2(-28));
  }
}
