/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_GEOMETRY_HPP
#define CAREXT_GEOMETRY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "carext/ball.hpp"

// Exact predicates and constructions on rational polygonal paths. Square
// roots are avoided throughout by comparing squared quantities; every
// predicate below is decidable rational arithmetic.

namespace carext {

struct Segment {
  RationalPoint p, q;

  bool degenerate() const { return p == q; }
};

// cross(b-a, c-a); sign gives orientation of the triple (a,b,c).
inline Rational cross3(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re);
}

inline bool in_box(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  return std::min(a.re, b.re) <= p.re && p.re <= std::max(a.re, b.re) &&
         std::min(a.im, b.im) <= p.im && p.im <= std::max(a.im, b.im);
}

inline bool point_on_segment(const RationalPoint& z, const Segment& s) {
  if (s.degenerate()) return z == s.p;
  return sgn(cross3(s.p, s.q, z)) == 0 && in_box(s.p, s.q, z);
}

// Exact intersection test including collinear overlap; a shared endpoint
// counts as intersecting.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  if (s1.degenerate()) return point_on_segment(s1.p, s2);
  if (s2.degenerate()) return point_on_segment(s2.p, s1);
  int d1 = sgn(cross3(s2.p, s2.q, s1.p));
  int d2 = sgn(cross3(s2.p, s2.q, s1.q));
  int d3 = sgn(cross3(s1.p, s1.q, s2.p));
  int d4 = sgn(cross3(s1.p, s1.q, s2.q));
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && in_box(s2.p, s2.q, s1.p)) return true;
  if (d2 == 0 && in_box(s2.p, s2.q, s1.q)) return true;
  if (d3 == 0 && in_box(s1.p, s1.q, s2.p)) return true;
  if (d4 == 0 && in_box(s1.p, s1.q, s2.q)) return true;
  return false;
}

// Squared distance from a point to a segment, exact.
inline Rational seg_dist_sq(const RationalPoint& z, const Segment& s) {
  if (s.degenerate()) return dist_sq(z, s.p);
  RationalPoint d = s.q - s.p;
  Rational len_sq = d.norm_sq();
  Rational t_num = (z.re - s.p.re) * d.re + (z.im - s.p.im) * d.im;
  if (sgn(t_num) <= 0) return dist_sq(z, s.p);
  if (t_num >= len_sq) return dist_sq(z, s.q);
  // foot of the perpendicular lies inside; distance^2 = cross^2 / len^2
  Rational cr = cross3(s.p, s.q, z);
  return cr * cr / len_sq;
}

// Squared distance between two segments (0 when they intersect).
inline Rational seg_seg_dist_sq(const Segment& a, const Segment& b) {
  if (segments_intersect(a, b)) return Rational(0);
  Rational best = seg_dist_sq(a.p, b);
  best = std::min(best, seg_dist_sq(a.q, b));
  best = std::min(best, seg_dist_sq(b.p, a));
  best = std::min(best, seg_dist_sq(b.q, a));
  return best;
}

// ---------------------------------------------------------------------------
// RationalPolygonalPath: breakpoints 0 = a_0 < ... < a_k = 1 with vertices
// f(a_j); linear in between. Closed paths repeat the first vertex at the end.
// Degenerate (constant) pieces are allowed; the terminal constant piece of
// access arcs uses one.
// ---------------------------------------------------------------------------
struct RationalPolygonalPath {
  std::vector<Rational> breakpoints;
  std::vector<RationalPoint> vertices;
  bool closed = false;

  RationalPolygonalPath() = default;
  RationalPolygonalPath(std::vector<Rational> bp, std::vector<RationalPoint> vs, bool cl)
      : breakpoints(std::move(bp)), vertices(std::move(vs)), closed(cl) {
    validate();
  }

  void validate() const {
    if (breakpoints.size() != vertices.size() || breakpoints.size() < 2)
      fail(errc::domain_error, "polygonal path needs matching breakpoints and vertices");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
      fail(errc::domain_error, "breakpoints must span [0,1]");
    for (size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i]))
        fail(errc::domain_error, "breakpoints must ascend strictly");
    if (closed && !(vertices.front() == vertices.back()))
      fail(errc::domain_error, "closed path must return to its first vertex");
  }

  size_t segment_count() const { return vertices.size() - 1; }
  Segment segment(size_t i) const { return Segment{vertices[i], vertices[i + 1]}; }
};

// Uniform-speed-in-index polyline through the given vertices.
inline RationalPolygonalPath path_through(std::vector<RationalPoint> vs, bool closed) {
  size_t n = vs.size();
  std::vector<Rational> bp(n);
  for (size_t i = 0; i < n; ++i) bp[i] = rat(static_cast<long>(i), static_cast<long>(n - 1));
  return RationalPolygonalPath(std::move(bp), std::move(vs), closed);
}

inline RationalPoint path_eval(const RationalPolygonalPath& P, const Rational& t) {
  if (t < 0 || t > 1) fail(errc::domain_error, "path parameter outside [0,1]");
  // binary search for the containing piece
  size_t lo = 0, hi = P.breakpoints.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (P.breakpoints[mid] <= t)
      lo = mid;
    else
      hi = mid;
  }
  const Rational& a = P.breakpoints[lo];
  const Rational& b = P.breakpoints[hi];
  if (t == a) return P.vertices[lo];
  if (t == b) return P.vertices[hi];
  Rational lambda = (t - a) / (b - a);
  return P.vertices[lo] + (P.vertices[hi] - P.vertices[lo]) * lambda;
}

inline bool point_on_path(const RationalPoint& z, const RationalPolygonalPath& P) {
  for (size_t i = 0; i < P.segment_count(); ++i)
    if (point_on_segment(z, P.segment(i))) return true;
  return false;
}

// Certified sup-norm bound between two paths on [0,1]. |P - Q| is piecewise
// linear in each coordinate on the merged breakpoint set, so its squared
// maximum is attained at a merged breakpoint; the only slack is the final
// directed square root. The returned U satisfies sup <= U <= sup + 2^-bits.
inline Rational sup_dist(const RationalPolygonalPath& P, const RationalPolygonalPath& Q,
                         long bits = 48) {
  std::vector<Rational> merged;
  merged.reserve(P.breakpoints.size() + Q.breakpoints.size());
  std::merge(P.breakpoints.begin(), P.breakpoints.end(), Q.breakpoints.begin(),
             Q.breakpoints.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  Rational max_sq(0);
  for (const Rational& t : merged) {
    Rational d = dist_sq(path_eval(P, t), path_eval(Q, t));
    if (d > max_sq) max_sq = d;
  }
  return sqrt_upper(max_sq, bits);
}

// Exact winding number by signed crossing counts. z must avoid the path.
inline long winding_number(const RationalPolygonalPath& P, const RationalPoint& z) {
  if (!P.closed) fail(errc::domain_error, "winding number needs a closed path");
  long w = 0;
  for (size_t i = 0; i < P.segment_count(); ++i) {
    Segment s = P.segment(i);
    if (point_on_segment(z, s)) fail(errc::on_boundary, "winding query point on the path");
    if (s.p.im <= z.im) {
      if (s.q.im > z.im && sgn(cross3(s.p, s.q, z)) > 0) ++w;
    } else {
      if (s.q.im <= z.im && sgn(cross3(s.p, s.q, z)) < 0) --w;
    }
  }
  return w;
}

// true iff dist(z, P) > d, decided exactly on squared quantities. Decides
// membership of z in the complement of the closed dilation of P by d.
inline bool dist_to_path_exceeds(const RationalPoint& z, const RationalPolygonalPath& P,
                                 const Rational& d) {
  if (sgn(d) < 0) fail(errc::domain_error, "dilation radius must be nonnegative");
  Rational dd = d * d;
  for (size_t i = 0; i < P.segment_count(); ++i)
    if (seg_dist_sq(z, P.segment(i)) <= dd) return false;
  return true;
}

// true iff every point of segment s is further than d from P.
inline bool seg_dist_to_path_exceeds(const Segment& s, const RationalPolygonalPath& P,
                                     const Rational& d) {
  Rational dd = d * d;
  for (size_t i = 0; i < P.segment_count(); ++i)
    if (seg_seg_dist_sq(s, P.segment(i)) <= dd) return false;
  return true;
}

// Pairwise simplicity over segments with adjacency exemptions. Consecutive
// segments legitimately share one endpoint; a closed path also joins last to
// first. Degenerate pieces are skipped.
inline bool path_is_simple(const RationalPolygonalPath& P) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < P.segment_count(); ++i)
    if (!P.segment(i).degenerate()) idx.push_back(i);
  size_t n = idx.size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      Segment sa = P.segment(idx[a]), sb = P.segment(idx[b]);
      bool adjacent = (b == a + 1) || (P.closed && a == 0 && b == n - 1);
      if (adjacent) {
        // allowed to meet exactly at the shared vertex
        const RationalPoint& shared = (b == a + 1) ? sb.p : sa.p;
        // crossing anywhere else is a violation
        if (sgn(cross3(sa.p, sa.q, sb.q)) == 0 && sgn(cross3(sa.p, sa.q, sb.p)) == 0) {
          // collinear neighbors: reject overlap beyond the shared point
          Segment trimmed_a{sa.p, sa.q}, trimmed_b{sb.p, sb.q};
          Rational along = (trimmed_a.q - trimmed_a.p).re * (trimmed_b.q - trimmed_b.p).re +
                           (trimmed_a.q - trimmed_a.p).im * (trimmed_b.q - trimmed_b.p).im;
          if (sgn(along) > 0) continue;  // continues forward, no backtrack
          return false;                  // doubles back over itself
        }
        if (segments_intersect(sa, sb)) {
          // must touch only at the shared endpoint
          if (point_on_segment(shared, sa) && point_on_segment(shared, sb)) {
            // verify no other contact: endpoints of one on the interior of the other
            if (point_on_segment(sa.p, sb) && !(sa.p == shared)) return false;
            if (point_on_segment(sa.q, sb) && !(sa.q == shared)) return false;
            if (point_on_segment(sb.p, sa) && !(sb.p == shared)) return false;
            if (point_on_segment(sb.q, sa) && !(sb.q == shared)) return false;
            continue;
          }
          return false;
        }
        continue;
      }
      if (segments_intersect(sa, sb)) return false;
    }
  }
  return true;
}

// Fast simplicity certificate for large closed polygons: strictly increasing
// polar order around an interior anchor plus winding one means the radial
// order is strict, hence the polygon is simple. Falls back to the exact
// pairwise check for small polygons.
inline bool closed_polygon_simple(const RationalPolygonalPath& P) {
  if (!P.closed) return path_is_simple(P);
  size_t n = P.vertices.size() - 1;  // distinct vertices
  if (n <= 1024) return path_is_simple(P);
  // anchor: vertex centroid
  Rational cx(0), cy(0);
  for (size_t i = 0; i < n; ++i) {
    cx += P.vertices[i].re;
    cy += P.vertices[i].im;
  }
  RationalPoint c(cx / Rational(static_cast<long>(n)), cy / Rational(static_cast<long>(n)));
  bool ccw = true, cw = true;
  for (size_t i = 0; i < n && (ccw || cw); ++i) {
    int s = sgn(cross3(c, P.vertices[i], P.vertices[i + 1]));
    if (s <= 0) ccw = false;
    if (s >= 0) cw = false;
  }
  if (ccw || cw) {
    long w = winding_number(P, c);
    if (w == 1 || w == -1) return true;
  }
  fail(errc::cap_exceeded, "polygon too large for the exact simplicity check");
}

}  // namespace carext

#endif
