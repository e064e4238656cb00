#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "fareylcm/farey.hpp"
#include "fareylcm/numtheory.hpp"

namespace fareylcm::hpreal {

// Working mantissa precision in bits.
struct Precision {
  long bits;
  explicit Precision(long b);  // throws if b < 16
};

// Midpoint-radius enclosure of a real number: the true value always lies
// in [mid - rad, mid + rad]. Midpoints carry the working precision; radii
// are tracked at a small fixed precision and always rounded upward, so
// every operation yields a rigorous enclosure of the exact result applied
// to any members of its input balls.
class Ball {
 public:
  Ball();                        // exact zero, 64-bit midpoint
  explicit Ball(long prec_bits); // exact zero
  Ball(const Ball&);
  Ball(Ball&&) noexcept;
  Ball& operator=(const Ball&);
  Ball& operator=(Ball&&) noexcept;
  ~Ball();

  static Ball exact_int(long v, long prec_bits);
  static Ball exact_bigint(const BigInt& v, long prec_bits);
  static Ball exact_dyadic(long mant, long exp2, long prec_bits);  // mant * 2^exp2
  static Ball from_fraction(const BigInt& num, const BigInt& den, long prec_bits);
  static Ball from_mpq(const mpq_class& q, long prec_bits);

  // Enclosure of [mid - rad, mid + rad] for exact rational mid and rad >= 0.
  static Ball make_enclosure(const mpq_class& mid, const mpq_class& rad, long prec_bits);

  long precision() const;
  bool is_exact() const;  // radius == 0
  bool contains_zero() const;
  bool contains_int(const BigInt& z) const;
  bool contains_fraction(const BigInt& num, const BigInt& den) const;
  bool radius_at_most_2exp(long e) const;   // rad <= 2^e, exact comparison
  bool radius_less_than_2exp(long e) const; // rad <  2^e, exact comparison

  // rad lies in [2^(e-1), 2^e); LONG_MIN for an exact ball.
  long radius_exp2() const;

  double mid_double() const;
  double rad_double_upper() const;
  std::string midpoint_str(int sig_digits) const;
  std::string str() const;  // debug: "mid ~ radius 2^e"

  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

 private:
  friend struct BallOps;
  mpfr_t mid_;
  mpfr_t rad_;
};

// [outer.lo, outer.hi] contains [inner.lo, inner.hi]; endpoints compared exactly.
bool ball_encloses(const Ball& outer, const Ball& inner);
bool balls_overlap(const Ball& a, const Ball& b);

// Enclosure of pi with radius <= 2^(-p.bits + 2).
Ball pi_ball(Precision p);

// Enclosure of sin(pi * r) for r in [0, 1], radius <= 2^(-p.bits + 4).
// Exact (radius 0) at r in {0, 1/2, 1, 1/6, 5/6}. Argument reduction is
// exact on the fraction before any floating evaluation.
Ball sin_pi_frac(const farey::Fraction& r, Precision p);

// Enclosure of cos(pi * r) for r in [0, 1], radius <= 2^(-p.bits + 4).
// Exact at r in {0, 1/3, 1/2, 2/3, 1}; in particular cos(pi/2) is a
// bit-exact zero, never a small ball around zero.
Ball cos_pi_frac(const farey::Fraction& r, Precision p);

// Enclosure of ln Gamma(r) for r in (0, 1], radius <= 2^(-p.bits + 8).
// Shifts the argument upward (ln Gamma(r) = ln Gamma(r + m) - sum of
// ln(r + j)) until r + m >= max(10, p.bits/8), then applies the Stirling
// expansion; the truncation remainder is bounded by twice the absolute
// value of the first omitted Bernoulli term. Throws on the pole r = 0.
Ball ln_gamma_frac(const farey::Fraction& r, Precision p);

Ball ball_add(const Ball& a, const Ball& b);
Ball ball_sub(const Ball& a, const Ball& b);
Ball ball_neg(const Ball& a);
Ball ball_abs(const Ball& a);
Ball ball_mul(const Ball& a, const Ball& b);
Ball ball_scale_by_int(const Ball& a, const BigInt& k);
Ball ball_scale_by_int(const Ball& a, long k);
Ball ball_mul_2exp(const Ball& a, long e);  // exact scaling by 2^e

// Monotone endpoint evaluations. ball_sqrt requires the interval to lie
// in [0, inf), ball_log in (0, inf); violations throw std::domain_error.
Ball ball_sqrt(const Ball& a);
Ball ball_exp(const Ball& a);
Ball ball_log(const Ball& a);

// Certified rounding: the unique integer z with radius < 1/4 and
// |mid - z| + radius < 1/2, or empty when no such certificate exists
// (a retry-at-higher-precision signal, not a failure).
std::optional<BigInt> round_to_integer(const Ball& b);

}  // namespace fareylcm::hpreal
