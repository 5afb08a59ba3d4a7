/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "carext/geometry.hpp"
#include "helpers.hpp"

using namespace carext;
using carext_tests::Sampler;
using carext_tests::to_double;

namespace {

RationalPoint pt(long re, long im) { return RationalPoint(Rational(re), Rational(im)); }

RationalPolygonalPath unit_square() {
  return path_through({pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1), pt(1, 1)}, true);
}

RationalPolygonalPath inscribed_square() {
  return path_through({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1), pt(1, 0)}, true);
}

// Independent winding oracle: sum of signed turning angles in doubles.
double winding_by_angles(const RationalPolygonalPath& P, const RationalPoint& z) {
  double total = 0;
  double zx = to_double(z.re), zy = to_double(z.im);
  for (size_t i = 0; i < P.segment_count(); ++i) {
    Segment s = P.segment(i);
    double ax = to_double(s.p.re) - zx, ay = to_double(s.p.im) - zy;
    double bx = to_double(s.q.re) - zx, by = to_double(s.q.im) - zy;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return total / (2.0 * M_PI);
}

// Independent membership oracle: exact parity ray cast along +x.
bool inside_by_ray_cast(const RationalPolygonalPath& P, const RationalPoint& z) {
  bool inside = false;
  for (size_t i = 0; i < P.segment_count(); ++i) {
    Segment s = P.segment(i);
    bool a_below = s.p.im <= z.im, b_below = s.q.im <= z.im;
    if (a_below == b_below) continue;
    Rational t = (z.im - s.p.im) / (s.q.im - s.p.im);
    Rational x = s.p.re + (s.q.re - s.p.re) * t;
    if (x > z.re) inside = !inside;
  }
  return inside;
}

RationalPolygonalPath refine_once(const RationalPolygonalPath& P) {
  std::vector<Rational> bp;
  std::vector<RationalPoint> vs;
  for (size_t i = 0; i + 1 < P.breakpoints.size(); ++i) {
    bp.push_back(P.breakpoints[i]);
    vs.push_back(P.vertices[i]);
    Rational mid = (P.breakpoints[i] + P.breakpoints[i + 1]) / 2;
    bp.push_back(mid);
    vs.push_back(path_eval(P, mid));
  }
  bp.push_back(P.breakpoints.back());
  vs.push_back(P.vertices.back());
  return RationalPolygonalPath(bp, vs, P.closed);
}

// Random star-shaped simple polygon around the origin.
RationalPolygonalPath random_star_polygon(Sampler& smp, int n) {
  std::vector<RationalPoint> vs;
  for (int i = 0; i < n; ++i) {
    Rational r = Rational(1, 2) + smp.unit01();
    double ang = 2.0 * M_PI * (i + 0.5 * to_double(smp.unit01())) / n;
    Rational c(static_cast<long>(std::lround(std::cos(ang) * (1 << 12))), 1 << 12);
    Rational s(static_cast<long>(std::lround(std::sin(ang) * (1 << 12))), 1 << 12);
    c.canonicalize();
    s.canonicalize();
    vs.push_back(RationalPoint(r * c, r * s));
  }
  vs.push_back(vs.front());
  return path_through(vs, true);
}

}  // namespace

TEST_CASE("path_eval pinned examples") {
  RationalPolygonalPath seg = path_through({pt(0, 0), pt(1, 0)}, false);
  CHECK(path_eval(seg, Rational(1, 2)) == RationalPoint(Rational(1, 2), Rational(0)));

  RationalPolygonalPath p({Rational(0), Rational(1, 2), Rational(1)},
                          {pt(0, 0), pt(0, 1), pt(1, 1)}, false);
  CHECK(path_eval(p, Rational(3, 4)) == RationalPoint(Rational(1, 2), Rational(1)));

  CHECK_THROWS_AS(path_eval(p, Rational(3, 2)), Error);
}

TEST_CASE("path_eval returns stored vertices at breakpoints") {
  Sampler smp(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalPoint> vs;
    for (int i = 0; i < 6; ++i) vs.push_back(smp.point_in_square(Rational(3)));
    RationalPolygonalPath P = path_through(vs, false);
    for (size_t i = 0; i < P.breakpoints.size(); ++i)
      REQUIRE(path_eval(P, P.breakpoints[i]) == P.vertices[i]);
  }
}

TEST_CASE("sup_dist pinned examples") {
  RationalPolygonalPath P = inscribed_square();
  CHECK(sup_dist(P, P) == Rational(0));

  RationalPolygonalPath z = path_through({pt(0, 0), pt(0, 0), pt(0, 0)}, false);
  RationalPolygonalPath o = path_through({pt(1, 0), pt(1, 0), pt(1, 0)}, false);
  Rational d = sup_dist(z, o);
  CHECK(d >= 1);
  CHECK(d <= Rational(1) + pow2(-40));
}

TEST_CASE("sup_dist of a translate matches |c| against dense sampling") {
  Sampler smp(103);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RationalPoint> vs;
    for (int i = 0; i < 7; ++i) vs.push_back(smp.point_in_square(Rational(2)));
    RationalPolygonalPath P = path_through(vs, false);
    RationalPoint c = smp.point_in_square(Rational(1));
    std::vector<RationalPoint> shifted;
    for (auto& v : vs) shifted.push_back(v + c);
    RationalPolygonalPath Q = path_through(shifted, false);
    Rational U = sup_dist(P, Q);
    Rational best(0);
    for (int i = 0; i <= 64; ++i) {
      Rational t(i, 64);
      t.canonicalize();
      Rational d = dist_sq(path_eval(P, t), path_eval(Q, t));
      if (d > best) best = d;
    }
    REQUIRE(U * U >= best);
    REQUIRE(U * U <= c.norm_sq() + pow2(-30));
    REQUIRE(best * 4 >= U * U);  // the factor-2 band, squared
  }
}

TEST_CASE("winding_number pinned examples") {
  CHECK(winding_number(unit_square(), pt(0, 0)) == 1);

  RationalPolygonalPath far_triangle =
      path_through({pt(5, 5), pt(7, 5), pt(6, 7), pt(5, 5)}, true);
  CHECK(winding_number(far_triangle, pt(0, 0)) == 0);

  CHECK_THROWS_AS(winding_number(unit_square(), pt(1, 0)), Error);
}

TEST_CASE("doubly traversed figure winds twice, against the angle oracle") {
  std::vector<RationalPoint> once = {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)};
  std::vector<RationalPoint> vs;
  for (int rep = 0; rep < 2; ++rep)
    for (auto& v : once) vs.push_back(v);
  vs.push_back(vs.front());
  RationalPolygonalPath P = path_through(vs, true);
  long w = winding_number(P, pt(0, 0));
  CHECK(w == 2);
  CHECK(std::abs(winding_by_angles(P, pt(0, 0)) - double(w)) < 1e-9);
}

TEST_CASE("winding_number matches the angle-summation oracle on random data") {
  Sampler smp(107);
  for (int trial = 0; trial < 30; ++trial) {
    RationalPolygonalPath P = random_star_polygon(smp, 8);
    RationalPoint z = smp.point_in_square(Rational(2));
    long w;
    try {
      w = winding_number(P, z);
    } catch (const Error&) {
      continue;  // sampled point on the path
    }
    REQUIRE(std::abs(winding_by_angles(P, z) - double(w)) < 1e-9);
  }
}

TEST_CASE("winding_number is invariant under breakpoint refinement") {
  Sampler smp(109);
  for (int trial = 0; trial < 10; ++trial) {
    RationalPolygonalPath P = random_star_polygon(smp, 7);
    RationalPolygonalPath R = refine_once(refine_once(P));
    for (int i = 0; i < 10; ++i) {
      RationalPoint z = smp.point_in_square(Rational(2));
      try {
        long w = winding_number(P, z);
        REQUIRE(winding_number(R, z) == w);
      } catch (const Error&) {
        // sampled point on the path; skip
      }
    }
  }
}

TEST_CASE("dist_to_path_exceeds pinned examples") {
  RationalPolygonalPath P = inscribed_square();
  CHECK(dist_to_path_exceeds(pt(2, 0), P, Rational(1, 2)));
  CHECK_FALSE(dist_to_path_exceeds(pt(1, 0), P, Rational(0)));
  CHECK_FALSE(dist_to_path_exceeds(pt(0, 0), P, Rational(1)));
}

TEST_CASE("dist_to_path_exceeds agrees with per-segment distance sampling") {
  Sampler smp(113);
  RationalPolygonalPath P = inscribed_square();
  for (int trial = 0; trial < 100; ++trial) {
    RationalPoint z = smp.point_in_square(Rational(3));
    Rational d = smp.unit01() * 2;
    Rational best = seg_dist_sq(z, P.segment(0));
    for (size_t i = 1; i < P.segment_count(); ++i) {
      Rational cand = seg_dist_sq(z, P.segment(i));
      if (cand < best) best = cand;
    }
    CHECK(dist_to_path_exceeds(z, P, d) == (best > d * d));
  }
}

TEST_CASE("dist_to_path_exceeds is monotone in the radius") {
  Sampler smp(127);
  RationalPolygonalPath P = inscribed_square();
  for (int trial = 0; trial < 100; ++trial) {
    RationalPoint z = smp.point_in_square(Rational(3));
    Rational d = smp.unit01();
    Rational d2 = d * smp.unit01();  // d2 <= d
    if (dist_to_path_exceeds(z, P, d)) CHECK(dist_to_path_exceeds(z, P, d2));
  }
}

TEST_CASE("segments_intersect pinned examples") {
  Segment diag1{pt(-1, -1), pt(1, 1)};
  Segment diag2{pt(-1, 1), pt(1, -1)};
  CHECK(segments_intersect(diag1, diag2));

  Segment par1{pt(0, 0), pt(1, 0)};
  Segment par2{pt(0, 1), pt(1, 1)};
  CHECK_FALSE(segments_intersect(par1, par2));

  Segment touch1{pt(0, 0), pt(1, 0)};
  Segment touch2{pt(1, 0), pt(1, 1)};
  CHECK(segments_intersect(touch1, touch2));
}

TEST_CASE("winding = +-1 is exactly the bounded face (ray-cast spot check)") {
  Sampler smp(131);
  int checked = 0;
  while (checked < 1000) {
    RationalPolygonalPath P = random_star_polygon(smp, 9);
    REQUIRE(path_is_simple(P));
    for (int i = 0; i < 50 && checked < 1000; ++i) {
      RationalPoint z = smp.point_in_square(Rational(2));
      long w;
      try {
        w = winding_number(P, z);
      } catch (const Error&) {
        continue;
      }
      ++checked;
      REQUIRE((std::labs(w) == 1) == inside_by_ray_cast(P, z));
    }
  }
}

TEST_CASE("sup_dist triangle inequality within the certification band") {
  Sampler smp(137);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalPoint> a, b, c;
    for (int i = 0; i < 5; ++i) {
      a.push_back(smp.point_in_square(Rational(2)));
      b.push_back(smp.point_in_square(Rational(2)));
      c.push_back(smp.point_in_square(Rational(2)));
    }
    RationalPolygonalPath P = path_through(a, false), Q = path_through(b, false),
                           R = path_through(c, false);
    Rational pq = sup_dist(P, Q), qr = sup_dist(Q, R), pr = sup_dist(P, R);
    CHECK(pr <= pq + qr + pow2(-30));
  }
}

TEST_CASE("segment distances") {
  Segment s{pt(0, 0), pt(2, 0)};
  CHECK(seg_dist_sq(pt(1, 1), s) == Rational(1));
  CHECK(seg_dist_sq(pt(-1, 0), s) == Rational(1));
  CHECK(seg_dist_sq(pt(3, 1), s) == Rational(2));
  Segment t{pt(0, 2), pt(2, 2)};
  CHECK(seg_seg_dist_sq(s, t) == Rational(4));
  Segment crossing{pt(1, -1), pt(1, 1)};
  CHECK(seg_seg_dist_sq(s, crossing) == Rational(0));
}

TEST_CASE("path simplicity detector") {
  CHECK(path_is_simple(inscribed_square()));
  RationalPolygonalPath bowtie =
      path_through({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2), pt(0, 0)}, true);
  CHECK_FALSE(path_is_simple(bowtie));
  RationalPolygonalPath with_tail(
      {Rational(0), Rational(1, 2), Rational(3, 4), Rational(1)},
      {pt(0, 0), pt(1, 0), pt(1, 1), pt(1, 1)}, false);
  CHECK(path_is_simple(with_tail));
}
