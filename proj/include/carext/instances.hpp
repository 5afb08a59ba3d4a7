/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_INSTANCES_HPP
#define CAREXT_INSTANCES_HPP

#include <utility>

#include "carext/curves.hpp"
#include "carext/elementary.hpp"
#include "carext/oracle.hpp"

// Built-in analytic domain families. Each instance bundles the curve oracle
// with the conformal map onto the disk and, where the family admits them,
// closure-capable and inverse evaluators. The analytic families are the test
// bed for everything downstream: their formulas double as test oracles.

namespace carext {

struct ConformalInstance {
  JordanCurveName curve;        // boundary Jordan curve J
  MapName phi;                  // conformal map interior(J) -> D
  std::optional<MapName> phi_closure;   // evaluator valid on the closed domain
  std::optional<MapName> phi_inverse;   // analytic inverse D-bar -> closure(J interior)
  std::string label;
};

// ---------------------------------------------------------------------------
// curves
// ---------------------------------------------------------------------------

inline JordanCurveName unit_circle_curve() {
  MapName param{
      [](const Ball& t, Precision k) {
        Ball base = circle_point(t.center.re, k + 2);
        // parameter spread: |d/dt e^{2 pi i t}| = 2 pi <= 7
        return base.inflated(t.radius * 7);
      },
      shift_modulus(3),  // 2 pi * 2^-(k+3) <= 2^-k
      DomainTag::unit_circle_params, true};
  JordanCurveName J{std::move(param), std::nullopt};
  // chord >= 4 d for circle distance d <= 1/2, so m1(k) = max(0, k-2) is valid
  J.declared_inverse_modulus = Modulus([](long k) { return std::max<long>(0, k - 2); });
  return J;
}

// Axis-aligned ellipse with semi-axes 1 and 1/2.
inline JordanCurveName ellipse_curve() {
  MapName param{
      [](const Ball& t, Precision k) {
        RInterval s, c;
        sincospi2(t.center.re, k + 3, s, c);
        RationalPoint center(c.mid(), s.mid() / 2);
        Rational r = std::max(c.width(), s.width());
        Ball base(center, sqrt_upper(r * r * 2, k + 6) / 2);
        return base.inflated(t.radius * 7);
      },
      shift_modulus(3),
      DomainTag::unit_circle_params, true};
  JordanCurveName J{std::move(param), std::nullopt};
  // |f(s)-f(t)| >= 2|sin(pi d)| * (1/2) * 2 = ... >= 2 d, so m1(k) = max(0, k-1)
  J.declared_inverse_modulus = Modulus([](long k) { return std::max<long>(0, k - 1); });
  return J;
}

// Image of the unit circle under f(z) = z + c z^2 (|c| <= 1/4).
inline JordanCurveName polynomial_curve(const RationalPoint& c) {
  MapName param{
      [c](const Ball& t, Precision k) {
        Ball e = circle_point(t.center.re, k + 4);
        Ball img = ball_add(e, ball_scale(ball_mul(e, e), c));
        // |d/dt f(e^{2 pi i t})| <= 2 pi (1 + 2|c|) <= 2 pi * 3/2 <= 10
        return img.inflated(t.radius * 10);
      },
      shift_modulus(4),
      DomainTag::unit_circle_params, true};
  JordanCurveName J{std::move(param), std::nullopt};
  // |f(u)-f(v)| >= |u-v| (1 - |c| |u+v|) >= |u-v|/2 >= 2d: m1(k) = max(0, k-1)
  J.declared_inverse_modulus = Modulus([](long k) { return std::max<long>(0, k - 1); });
  return J;
}

// ---------------------------------------------------------------------------
// Moebius family phi(z) = (z - a)/(1 - conj(a) z), |a| < 1. Disk-to-disk
// Moebius maps send balls to exact balls, so the oracle is tight: the image
// of B(c, r) under (alpha z + beta)/(gamma z + delta) is computed through
// translation, inversion (exact on disks) and scaling.
// ---------------------------------------------------------------------------
inline Ball mobius_image(const RationalPoint& alpha, const RationalPoint& beta,
                         const RationalPoint& gamma, const RationalPoint& delta,
                         const Ball& z) {
  bool gamma_zero = sgn(gamma.re) == 0 && sgn(gamma.im) == 0;
  if (gamma_zero) {
    // affine map (alpha z + beta)/delta
    Ball num = ball_add(ball_scale(z, alpha), Ball(beta));
    return ball_mul(num, ball_recip(Ball(delta)));
  }
  // (alpha z + beta)/(gamma z + delta) = alpha/gamma + ((beta gamma - alpha delta)/gamma^2) * gamma/(gamma z + delta)
  RationalPoint gamma_inv = gamma.conj() * (Rational(1) / gamma.norm_sq());
  Ball inv = ball_recip(ball_add(ball_scale(z, gamma), Ball(delta)));
  RationalPoint residue = (beta * gamma - alpha * delta) * gamma_inv;
  Ball head(alpha * gamma_inv);
  return ball_add(head, ball_scale(inv, residue));
}

inline ConformalInstance mobius_instance(const RationalPoint& a) {
  if (a.norm_sq() >= 1) fail(errc::domain_error, "mobius parameter must satisfy |a| < 1");
  // Lipschitz bound on D-bar: (1+|a|)/(1-|a|)
  Rational amag = abs_upper(a, 32);
  if (amag >= 1) fail(errc::domain_error, "mobius parameter too close to the unit circle");
  long lip_bits = (sgn(amag) == 0) ? 0 : ilog2_upper((1 + amag) / (1 - amag));
  Modulus mod = shift_modulus(std::max<long>(0, lip_bits));

  auto forward = [a](const Ball& z, Precision) {
    // (z - a)/(1 - conj(a) z): alpha = 1, beta = -a, gamma = -conj(a), delta = 1
    return mobius_image(RationalPoint(Rational(1), Rational(0)), -a, -a.conj(),
                        RationalPoint(Rational(1), Rational(0)), z);
  };
  auto backward = [a](const Ball& w, Precision) {
    return mobius_image(RationalPoint(Rational(1), Rational(0)), a, a.conj(),
                        RationalPoint(Rational(1), Rational(0)), w);
  };

  ConformalInstance inst;
  inst.curve = unit_circle_curve();
  inst.phi = MapName{forward, mod, DomainTag::open_disk, true};
  inst.phi_closure = MapName{forward, mod, DomainTag::plane_region, true};
  inst.phi_inverse = MapName{backward, mod, DomainTag::closed_disk, true};
  inst.label = "mobius";
  return inst;
}

// Rotation z -> e^{2 pi i beta} z, beta in turns.
inline ConformalInstance rotation_instance(const Rational& beta) {
  auto rot = [beta](const Ball& z, Precision k) {
    Ball u = circle_point(beta, k + ilog2_upper(abs_upper(z.center) + z.radius + 1) + 4);
    return ball_mul(u, z);
  };
  auto unrot = [beta](const Ball& z, Precision k) {
    Ball u = circle_point(-beta, k + ilog2_upper(abs_upper(z.center) + z.radius + 1) + 4);
    return ball_mul(u, z);
  };
  ConformalInstance inst;
  inst.curve = unit_circle_curve();
  inst.phi = MapName{rot, shift_modulus(0), DomainTag::open_disk, true};
  inst.phi_closure = MapName{rot, shift_modulus(0), DomainTag::plane_region, true};
  inst.phi_inverse = MapName{unrot, shift_modulus(0), DomainTag::closed_disk, true};
  inst.label = "rotation";
  return inst;
}

// ---------------------------------------------------------------------------
// Polynomial family f(z) = z + c z^2 with |c| <= 1/4; phi = f^{-1} evaluated
// by certified rational Newton iteration. On |z| <= 1 + 1/8 the derivative
// satisfies |f'(z)| = |1 + 2 c z| >= 1 - 2|c|(1+1/8) >= 7/16, which converts
// the exact residual |f(z*) - w| into the error bound |z* - f^{-1}(w)| <=
// (16/7) |f(z*) - w| along the segment joining them.
// ---------------------------------------------------------------------------
inline ConformalInstance polynomial_instance(const RationalPoint& c) {
  if (c.norm_sq() > Rational(1, 16))
    fail(errc::domain_error, "polynomial coefficient must satisfy |c| <= 1/4");

  auto f_exact = [c](const RationalPoint& z) { return z + (z * z) * c; };
  auto f_ball = [c, f_exact](const Ball& z, Precision) {
    // f(B(m,r)) subset B(f(m), |f'(m)| r + |c| r^2)
    RationalPoint m = z.center;
    RationalPoint fp = RationalPoint(Rational(1), Rational(0)) + (m * c) * Rational(2);
    Rational rad = abs_upper(fp) * z.radius + abs_upper(c) * z.radius * z.radius;
    return Ball(f_exact(m), rad);
  };

  auto newton_inverse = [c, f_exact](const Ball& w, Precision k) {
    // residual target drives certified radius (16/7 < 3)
    Rational target = pow2(-k - 2);
    long round_bits = k + 12;
    RationalPoint z = w.center;  // seed: near-identity map
    for (int it = 0; it < 96; ++it) {
      RationalPoint residual = f_exact(z) - w.center;
      if (residual.norm_sq() <= target * target / 9) break;
      RationalPoint fp = RationalPoint(Rational(1), Rational(0)) + (z * c) * Rational(2);
      Rational n = fp.norm_sq();
      if (sgn(n) == 0) fail(errc::domain_error, "vanishing derivative in Newton inversion");
      RationalPoint step = residual * fp.conj() * (Rational(1) / n);
      z = z - step;
      z = RationalPoint(dyadic_round(z.re, round_bits), dyadic_round(z.im, round_bits));
    }
    RationalPoint residual = f_exact(z) - w.center;
    Rational res_ub = abs_upper(residual, k + 8);
    if (res_ub > target)
      fail(errc::cap_exceeded, "Newton inversion failed to reach its residual target");
    // |z - f^{-1}(w_c)| <= (16/7) res; input ball spreads by |(f^{-1})'| <= 16/7
    Rational rad = (res_ub + w.radius) * Rational(16, 7);
    return Ball(z, rad);
  };

  ConformalInstance inst;
  inst.curve = polynomial_curve(c);
  // |(f^{-1})'| <= 16/7 < 4: modulus shift 2
  inst.phi = MapName{newton_inverse, shift_modulus(2), DomainTag::plane_region, true};
  inst.phi_closure = MapName{newton_inverse, shift_modulus(2), DomainTag::plane_region, true};
  inst.phi_inverse = MapName{f_ball, shift_modulus(2), DomainTag::closed_disk, true};
  inst.label = "polynomial";
  return inst;
}

inline ConformalInstance identity_instance() {
  return mobius_instance(RationalPoint(Rational(0), Rational(0)));
}

}  // namespace carext

#endif
