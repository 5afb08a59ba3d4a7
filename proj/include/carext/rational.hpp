/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_RATIONAL_HPP
#define CAREXT_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "carext/error.hpp"

namespace carext {

// Exact arithmetic lives on GMP rationals. mpq_class keeps values canonical
// (reduced, positive denominator), which is exactly the representation
// invariant the rest of the engine assumes. No floating point appears
// anywhere below this layer or above it inside the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// 2^e for possibly negative e.
inline Rational pow2(long e) {
  Rational q;
  if (e >= 0) {
    mpz_mul_2exp(q.get_num_mpz_t(), Rational(1).get_num().get_mpz_t(), static_cast<unsigned long>(e));
    q.get_den() = 1;
  } else {
    q.get_num() = 1;
    mpz_mul_2exp(q.get_den_mpz_t(), Rational(1).get_num().get_mpz_t(), static_cast<unsigned long>(-e));
  }
  return q;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// floor(q * 2^bits) as an integer.
inline Integer scaled_floor(const Rational& q, long bits) {
  Integer num = q.get_num();
  if (bits >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(bits));
  Integer den = q.get_den();
  if (bits < 0) mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-bits));
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

inline Integer scaled_ceil(const Rational& q, long bits) {
  Integer num = q.get_num();
  if (bits >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(bits));
  Integer den = q.get_den();
  if (bits < 0) mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-bits));
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// Largest dyadic multiple of 2^-bits that is <= q. Keeps denominators bounded
// in hot loops; every rounding is directed so enclosures stay sound.
inline Rational dyadic_floor(const Rational& q, long bits) {
  Rational out(scaled_floor(q, bits));
  return out * pow2(-bits);
}

inline Rational dyadic_ceil(const Rational& q, long bits) {
  Rational out(scaled_ceil(q, bits));
  return out * pow2(-bits);
}

// Nearest-ish dyadic (round toward -inf of q*2^bits + 1/2); only used where
// the rounding direction is absorbed into an explicit error term.
inline Rational dyadic_round(const Rational& q, long bits) {
  return dyadic_floor(q + pow2(-bits - 1), bits);
}

// Minimal e with q <= 2^e (q > 0).
inline long ilog2_upper(const Rational& q) {
  if (sgn(q) <= 0) fail(errc::domain_error, "ilog2_upper needs a positive argument");
  long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  long e = num_bits - den_bits + 1;
  while (q <= pow2(e - 1)) --e;
  return e;
}

// Maximal e with 2^e <= q (q > 0).
inline long ilog2_lower(const Rational& q) {
  long e = ilog2_upper(q);
  return (q == pow2(e)) ? e : e - 1;
}

// Directed square-root bounds: sqrt_lower(q) <= sqrt(q) <= sqrt_upper(q),
// each within 2^-bits of the truth. Integer square roots do the work, so the
// result is an exact dyadic; no irrational value is ever represented.
inline Rational sqrt_upper(const Rational& q, long bits) {
  if (sgn(q) < 0) fail(errc::domain_error, "sqrt of a negative rational");
  if (sgn(q) == 0) return Rational(0);
  Integer scaled = scaled_ceil(q, 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  // root = floor(sqrt(scaled)) so root+1 > sqrt(scaled) >= sqrt(q)*2^bits.
  return Rational(root + 1) * pow2(-bits);
}

inline Rational sqrt_lower(const Rational& q, long bits) {
  if (sgn(q) < 0) fail(errc::domain_error, "sqrt of a negative rational");
  if (sgn(q) == 0) return Rational(0);
  Integer scaled = scaled_floor(q, 2 * bits);
  if (sgn(Rational(scaled)) <= 0) return Rational(0);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root) * pow2(-bits);
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_parse(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

// ---------------------------------------------------------------------------
// Closed rational interval [lo, hi]. The workhorse of every validated
// elementary-function evaluation. Operations are outward-directed.
// ---------------------------------------------------------------------------
struct RInterval {
  Rational lo, hi;

  RInterval() : lo(0), hi(0) {}
  explicit RInterval(const Rational& x) : lo(x), hi(x) {}
  RInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) fail(errc::domain_error, "interval with lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const RInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  RInterval operator-() const { return RInterval(-hi, -lo); }
  RInterval operator+(const RInterval& o) const { return RInterval(lo + o.lo, hi + o.hi); }
  RInterval operator-(const RInterval& o) const { return RInterval(lo - o.hi, hi - o.lo); }
  RInterval operator*(const RInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return RInterval(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
  }
  RInterval operator+(const Rational& x) const { return RInterval(lo + x, hi + x); }
  RInterval operator-(const Rational& x) const { return RInterval(lo - x, hi - x); }
  RInterval operator*(const Rational& x) const {
    return x >= 0 ? RInterval(lo * x, hi * x) : RInterval(hi * x, lo * x);
  }

  // Reciprocal; the interval must not straddle zero.
  RInterval recip() const {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) fail(errc::domain_error, "interval reciprocal across zero");
    return RInterval(Rational(1) / hi, Rational(1) / lo);
  }
  RInterval operator/(const RInterval& o) const { return *this * o.recip(); }

  // Outward dyadic rounding at 2^-bits resolution.
  RInterval rounded(long bits) const { return RInterval(dyadic_floor(lo, bits), dyadic_ceil(hi, bits)); }

  static RInterval hull(const RInterval& a, const RInterval& b) {
    return RInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
  }
};

inline RInterval interval_sqrt(const RInterval& x, long bits) {
  if (sgn(x.lo) < 0) fail(errc::domain_error, "sqrt of interval reaching below zero");
  return RInterval(sqrt_lower(x.lo, bits), sqrt_upper(x.hi, bits));
}

inline RInterval interval_sq(const RInterval& x) {
  Rational a = x.lo * x.lo, b = x.hi * x.hi;
  if (sgn(x.lo) <= 0 && sgn(x.hi) >= 0) return RInterval(Rational(0), std::max(a, b));
  return RInterval(std::min(a, b), std::max(a, b));
}

}  // namespace carext

#endif
