#include "fareylcm/hpreal.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>
#include <vector>

#include "fareylcm/bernoulli.hpp"

namespace fareylcm::hpreal {

namespace {
constexpr long kRadiusPrec = 32;
constexpr long kMinPrec = 16;
}  // namespace

Precision::Precision(long b) : bits(b) {
  if (b < kMinPrec) throw std::invalid_argument("Precision: bits must be >= 16");
}

Ball::Ball() : Ball(64) {}

Ball::Ball(long prec_bits) {
  if (prec_bits < kMinPrec) throw std::invalid_argument("Ball: precision must be >= 16");
  mpfr_init2(mid_, prec_bits);
  mpfr_set_zero(mid_, 1);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
  mpfr_init2(mid_, kMinPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(rad_, 1);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

// All construction/arithmetic goes through here so radius bookkeeping
// stays in one place.
struct BallOps {
  // rad += 2^e
  static void rad_add_2exp(Ball& b, mpfr_exp_t e) {
    mpfr_t t;
    mpfr_init2(t, kRadiusPrec);
    mpfr_set_ui_2exp(t, 1, e, MPFR_RNDU);
    mpfr_add(b.rad_, b.rad_, t, MPFR_RNDU);
    mpfr_clear(t);
  }

  // Accounts for the rounding of the midpoint: one ulp of mid when the
  // ternary value reports an inexact result.
  static void rad_add_ulp(Ball& b, int ternary) {
    if (ternary == 0) return;
    assert(mpfr_regular_p(b.mid_));
    rad_add_2exp(b, mpfr_get_exp(b.mid_) - mpfr_get_prec(b.mid_));
  }

  static void rad_add(Ball& b, mpfr_srcptr extra) {
    mpfr_add(b.rad_, b.rad_, extra, MPFR_RNDU);
  }

  // out = |x| rounded up at radius precision
  static void mag_upper(mpfr_ptr out, mpfr_srcptr x) {
    mpfr_set(out, x, MPFR_RNDA);
    mpfr_abs(out, out, MPFR_RNDU);
  }

  // out = |b.mid| + b.rad rounded up (an upper bound on |values of b|)
  static void ball_mag_upper(mpfr_ptr out, const Ball& b) {
    mag_upper(out, b.mid_);
    mpfr_add(out, out, b.rad_, MPFR_RNDU);
  }

  // Exact difference helper: out = x - y with the ternary forced to zero
  // by growing the scratch precision as needed.
  static void exact_sub(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_prec_t p = std::max(mpfr_get_prec(x), mpfr_get_prec(y)) + 64;
    for (;;) {
      mpfr_set_prec(out, p);
      if (mpfr_sub(out, x, y, MPFR_RNDN) == 0) return;
      p *= 2;
      if (p > (1L << 30)) throw std::logic_error("exact_sub: unexpected precision blowup");
    }
  }

  static Ball add(const Ball& a, const Ball& b) {
    Ball out(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_add(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
    rad_add_ulp(out, t);
    return out;
  }

  static Ball neg(const Ball& a) {
    Ball out(mpfr_get_prec(a.mid_));
    mpfr_neg(out.mid_, a.mid_, MPFR_RNDN);  // exact
    mpfr_set(out.rad_, a.rad_, MPFR_RNDU);
    return out;
  }

  static Ball abs(const Ball& a) {
    Ball out(mpfr_get_prec(a.mid_));
    if (a.contains_zero()) {
      // |values| range over [0, |mid| + rad]: center the hull; the
      // halvings are exact scalings by 2^-1
      mpfr_t u;
      mpfr_init2(u, kRadiusPrec);
      ball_mag_upper(u, a);
      mpfr_mul_2si(out.mid_, u, -1, MPFR_RNDN);
      mpfr_mul_2si(out.rad_, u, -1, MPFR_RNDU);
      mpfr_clear(u);
      return out;
    }
    mpfr_abs(out.mid_, a.mid_, MPFR_RNDN);  // exact
    mpfr_set(out.rad_, a.rad_, MPFR_RNDU);
    return out;
  }

  static Ball mul(const Ball& a, const Ball& b) {
    Ball out(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_mul(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // first-order propagation |a|rb + |b|ra plus the quadratic ra*rb
    mpfr_t r1, r2;
    mpfr_init2(r1, kRadiusPrec);
    mpfr_init2(r2, kRadiusPrec);
    mpfr_mul(r1, a.mid_, b.rad_, MPFR_RNDA);
    mpfr_abs(r1, r1, MPFR_RNDU);
    mpfr_mul(r2, b.mid_, a.rad_, MPFR_RNDA);
    mpfr_abs(r2, r2, MPFR_RNDU);
    mpfr_add(out.rad_, r1, r2, MPFR_RNDU);
    mpfr_mul(r1, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, r1, MPFR_RNDU);
    rad_add_ulp(out, t);
    mpfr_clear(r1);
    mpfr_clear(r2);
    return out;
  }

  static Ball scale_z(const Ball& a, const BigInt& k) {
    Ball out(mpfr_get_prec(a.mid_));
    int t = mpfr_mul_z(out.mid_, a.mid_, k.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(out.rad_, a.rad_, k.get_mpz_t(), MPFR_RNDA);
    mpfr_abs(out.rad_, out.rad_, MPFR_RNDU);
    rad_add_ulp(out, t);
    return out;
  }

  static Ball mul_2exp(const Ball& a, long e) {
    Ball out(mpfr_get_prec(a.mid_));
    mpfr_mul_2si(out.mid_, a.mid_, e, MPFR_RNDN);  // exact
    mpfr_mul_2si(out.rad_, a.rad_, e, MPFR_RNDU);
    return out;
  }

  // Enclosure of fn over [mid - rad, mid + rad] for monotone increasing fn.
  template <typename Fn>
  static Ball monotone(const Ball& a, Fn fn) {
    mpfr_prec_t p = mpfr_get_prec(a.mid_);
    mpfr_t lo, hi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
    mpfr_add(hi, a.mid_, a.rad_, MPFR_RNDU);
    fn(lo, lo, MPFR_RNDD);
    fn(hi, hi, MPFR_RNDU);
    Ball out(p);
    mpfr_add(out.mid_, lo, hi, MPFR_RNDN);
    mpfr_mul_2si(out.mid_, out.mid_, -1, MPFR_RNDN);
    mpfr_t r1, r2;
    mpfr_init2(r1, kRadiusPrec);
    mpfr_init2(r2, kRadiusPrec);
    mpfr_sub(r1, out.mid_, lo, MPFR_RNDU);
    mpfr_sub(r2, hi, out.mid_, MPFR_RNDU);
    if (mpfr_cmp(r1, r2) >= 0) {
      mpfr_set(out.rad_, r1, MPFR_RNDU);
    } else {
      mpfr_set(out.rad_, r2, MPFR_RNDU);
    }
    if (mpfr_sgn(out.rad_) < 0) mpfr_set_zero(out.rad_, 1);
    mpfr_clear(r1);
    mpfr_clear(r2);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
  }

  // Sign of the lower endpoint mid - rad. Correct rounding preserves the
  // sign of the exact difference even at scratch precision.
  static int lower_sign(const Ball& a) {
    mpfr_t lo;
    mpfr_init2(lo, kMinPrec);
    mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
    int s = mpfr_sgn(lo);
    mpfr_clear(lo);
    return s;
  }

  static Ball make(long prec) { return Ball(prec); }
  static mpfr_ptr mid(Ball& b) { return b.mid_; }
  static mpfr_ptr rad(Ball& b) { return b.rad_; }
};

long Ball::precision() const { return mpfr_get_prec(mid_); }

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::contains_int(const BigInt& z) const {
  mpfr_t d;
  mpfr_init2(d, mpfr_get_prec(mid_) + 64);
  mpfr_prec_t p = mpfr_get_prec(d);
  while (mpfr_sub_z(d, mid_, z.get_mpz_t(), MPFR_RNDN) != 0) {
    p *= 2;
    if (p > (1L << 30)) throw std::logic_error("contains_int: precision blowup");
    mpfr_set_prec(d, p);
  }
  bool in = mpfr_cmpabs(d, rad_) <= 0;
  mpfr_clear(d);
  return in;
}

bool Ball::contains_fraction(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw std::invalid_argument("contains_fraction: zero denominator");
  BigInt n = num, q = den;
  if (q < 0) {
    n = -n;
    q = -q;
  }
  // |mid - n/q| <= rad  <=>  |mid*q - n| <= rad*q, both sides exact
  mpfr_t t, rq;
  mpfr_prec_t p = mpfr_get_prec(mid_) + static_cast<mpfr_prec_t>(mpz_sizeinbase(q.get_mpz_t(), 2)) + 64;
  mpfr_init2(t, p);
  while (mpfr_mul_z(t, mid_, q.get_mpz_t(), MPFR_RNDN) != 0 ||
         mpfr_sub_z(t, t, n.get_mpz_t(), MPFR_RNDN) != 0) {
    p *= 2;
    if (p > (1L << 30)) throw std::logic_error("contains_fraction: precision blowup");
    mpfr_set_prec(t, p);
  }
  mpfr_init2(rq, kRadiusPrec + static_cast<mpfr_prec_t>(mpz_sizeinbase(q.get_mpz_t(), 2)) + 4);
  int exact = mpfr_mul_z(rq, rad_, q.get_mpz_t(), MPFR_RNDU);
  assert(exact == 0);
  (void)exact;
  bool in = mpfr_cmpabs(t, rq) <= 0;
  mpfr_clear(t);
  mpfr_clear(rq);
  return in;
}

bool Ball::radius_at_most_2exp(long e) const {
  mpfr_t t;
  mpfr_init2(t, kMinPrec);
  mpfr_set_ui_2exp(t, 1, e, MPFR_RNDN);  // exact
  bool ok = mpfr_cmp(rad_, t) <= 0;
  mpfr_clear(t);
  return ok;
}

bool Ball::radius_less_than_2exp(long e) const {
  mpfr_t t;
  mpfr_init2(t, kMinPrec);
  mpfr_set_ui_2exp(t, 1, e, MPFR_RNDN);
  bool ok = mpfr_cmp(rad_, t) < 0;
  mpfr_clear(t);
  return ok;
}

long Ball::radius_exp2() const {
  if (mpfr_zero_p(rad_)) return LONG_MIN;
  return mpfr_get_exp(rad_);
}

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Ball::rad_double_upper() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Ball::midpoint_str(int sig_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", sig_digits, mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::str() const {
  if (is_exact()) return midpoint_str(20) + " (exact)";
  return midpoint_str(20) + " ~ radius 2^" + std::to_string(radius_exp2());
}

Ball Ball::exact_int(long v, long prec_bits) {
  Ball out(std::max(prec_bits, 64L));
  int t = mpfr_set_si(out.mid_, v, MPFR_RNDN);
  assert(t == 0);
  (void)t;
  return out;
}

Ball Ball::exact_bigint(const BigInt& v, long prec_bits) {
  long need = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) + 2;
  Ball out(std::max(prec_bits, need));
  int t = mpfr_set_z(out.mid_, v.get_mpz_t(), MPFR_RNDN);
  assert(t == 0);
  (void)t;
  return out;
}

Ball Ball::exact_dyadic(long mant, long exp2, long prec_bits) {
  Ball out(std::max(prec_bits, 64L));
  int t = mpfr_set_si_2exp(out.mid_, mant, exp2, MPFR_RNDN);
  assert(t == 0);
  (void)t;
  return out;
}

Ball Ball::from_fraction(const BigInt& num, const BigInt& den, long prec_bits) {
  if (den <= 0) throw std::invalid_argument("from_fraction: denominator must be positive");
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(q, prec_bits);
}

Ball Ball::from_mpq(const mpq_class& q, long prec_bits) {
  Ball out(prec_bits);
  int t = mpfr_set_q(out.mid_, q.get_mpq_t(), MPFR_RNDN);
  BallOps::rad_add_ulp(out, t);
  return out;
}

Ball Ball::make_enclosure(const mpq_class& mid, const mpq_class& rad, long prec_bits) {
  if (rad < 0) throw std::invalid_argument("make_enclosure: radius must be >= 0");
  Ball out = from_mpq(mid, prec_bits);
  mpfr_t r;
  mpfr_init2(r, kRadiusPrec);
  mpfr_set_q(r, rad.get_mpq_t(), MPFR_RNDU);
  BallOps::rad_add(out, r);
  mpfr_clear(r);
  return out;
}

bool ball_encloses(const Ball& outer, const Ball& inner) {
  mpfr_t olo, ilo, ohi_neg, ihi_neg, om, im;
  mpfr_init2(olo, kMinPrec);
  mpfr_init2(ilo, kMinPrec);
  mpfr_init2(ohi_neg, kMinPrec);
  mpfr_init2(ihi_neg, kMinPrec);
  mpfr_init2(om, mpfr_get_prec(outer.mid()));
  mpfr_init2(im, mpfr_get_prec(inner.mid()));
  BallOps::exact_sub(olo, outer.mid(), outer.rad());
  BallOps::exact_sub(ilo, inner.mid(), inner.rad());
  bool ok = mpfr_cmp(olo, ilo) <= 0;  // outer.lo <= inner.lo
  if (ok) {
    mpfr_neg(om, outer.mid(), MPFR_RNDN);  // exact
    mpfr_neg(im, inner.mid(), MPFR_RNDN);
    BallOps::exact_sub(ohi_neg, om, outer.rad());  // -(outer.hi)
    BallOps::exact_sub(ihi_neg, im, inner.rad());  // -(inner.hi)
    ok = mpfr_cmp(ohi_neg, ihi_neg) <= 0;          // outer.hi >= inner.hi
  }
  mpfr_clear(olo);
  mpfr_clear(ilo);
  mpfr_clear(ohi_neg);
  mpfr_clear(ihi_neg);
  mpfr_clear(om);
  mpfr_clear(im);
  return ok;
}

bool balls_overlap(const Ball& a, const Ball& b) {
  // |a.mid - b.mid| <= a.rad + b.rad
  mpfr_t d, s;
  mpfr_init2(d, kMinPrec);
  mpfr_init2(s, kRadiusPrec);
  BallOps::exact_sub(d, a.mid(), b.mid());
  mpfr_add(s, a.rad(), b.rad(), MPFR_RNDU);
  bool ok = mpfr_cmpabs(d, s) <= 0;
  mpfr_clear(d);
  mpfr_clear(s);
  return ok;
}

Ball pi_ball(Precision p) {
  Ball out = BallOps::make(p.bits);
  int t = mpfr_const_pi(BallOps::mid(out), MPFR_RNDN);
  BallOps::rad_add_ulp(out, t);
  return out;
}

Ball ball_add(const Ball& a, const Ball& b) { return BallOps::add(a, b); }
Ball ball_sub(const Ball& a, const Ball& b) { return BallOps::add(a, BallOps::neg(b)); }
Ball ball_neg(const Ball& a) { return BallOps::neg(a); }
Ball ball_abs(const Ball& a) { return BallOps::abs(a); }
Ball ball_mul(const Ball& a, const Ball& b) { return BallOps::mul(a, b); }
Ball ball_scale_by_int(const Ball& a, const BigInt& k) { return BallOps::scale_z(a, k); }
Ball ball_scale_by_int(const Ball& a, long k) { return BallOps::scale_z(a, BigInt(k)); }
Ball ball_mul_2exp(const Ball& a, long e) { return BallOps::mul_2exp(a, e); }

Ball ball_sqrt(const Ball& a) {
  if (BallOps::lower_sign(a) < 0) {
    throw std::domain_error("ball_sqrt: interval contains negative values");
  }
  return BallOps::monotone(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_sqrt(o, x, r); });
}

Ball ball_exp(const Ball& a) {
  return BallOps::monotone(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_exp(o, x, r); });
}

Ball ball_log(const Ball& a) {
  if (BallOps::lower_sign(a) <= 0) {
    throw std::domain_error("ball_log: interval reaches non-positive values");
  }
  return BallOps::monotone(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_log(o, x, r); });
}

std::optional<BigInt> round_to_integer(const Ball& b) {
  // certificate: radius < 1/4 and |mid - z| + radius < 1/2
  if (!(mpfr_cmp_d(b.rad(), 0.25) < 0)) return std::nullopt;
  BigInt z;
  mpfr_t d;
  mpfr_init2(d, kMinPrec);
  mpfr_get_z(z.get_mpz_t(), b.mid(), MPFR_RNDN);
  mpfr_prec_t p = mpfr_get_prec(b.mid()) + 64;
  mpfr_set_prec(d, p);
  while (mpfr_sub_z(d, b.mid(), z.get_mpz_t(), MPFR_RNDN) != 0) {
    p *= 2;
    if (p > (1L << 30)) throw std::logic_error("round_to_integer: precision blowup");
    mpfr_set_prec(d, p);
  }
  mpfr_abs(d, d, MPFR_RNDN);
  mpfr_t s;
  mpfr_init2(s, kRadiusPrec);
  mpfr_add(s, d, b.rad(), MPFR_RNDU);
  bool ok = mpfr_cmp_d(s, 0.5) < 0;
  mpfr_clear(s);
  mpfr_clear(d);
  if (!ok) return std::nullopt;
  return z;
}

namespace {

// pi * num / den at working precision w. The rational is rounded once
// (relative error), so the radius stays ~2^-w regardless of how large
// num and den are.
Ball pi_scaled(std::int64_t num, std::int64_t den, long w) {
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return ball_mul(pi_ball(Precision(w)), Ball::from_mpq(q, w));
}

Ball exact_half_signed(int sign, long prec) { return Ball::exact_dyadic(sign, -1, prec); }

}  // namespace

Ball sin_pi_frac(const farey::Fraction& r, Precision p) {
  if (r.num() == 0 || r.num() == r.den()) return Ball::exact_int(0, p.bits);
  if (r.is_half()) return Ball::exact_int(1, p.bits);
  if (r.den() == 6) return exact_half_signed(1, p.bits);  // sin(pi/6) = sin(5pi/6) = 1/2
  farey::Fraction rr = r.less_than_half() ? r : r.complement();
  long w = p.bits + 8;
  Ball arg = pi_scaled(rr.num(), rr.den(), w);
  Ball out(w);
  int t = mpfr_sin(BallOps::mid(out), arg.mid(), MPFR_RNDN);
  // |d sin| <= |d arg|
  mpfr_set(BallOps::rad(out), arg.rad(), MPFR_RNDU);
  BallOps::rad_add_ulp(out, t);
  return out;
}

Ball cos_pi_frac(const farey::Fraction& r, Precision p) {
  if (r.num() == 0) return Ball::exact_int(1, p.bits);
  if (r.num() == r.den()) return Ball::exact_int(-1, p.bits);
  if (r.is_half()) return Ball::exact_int(0, p.bits);
  if (r.den() == 3) return exact_half_signed(r.num() == 1 ? 1 : -1, p.bits);
  bool negate = !r.less_than_half();  // cos(pi r) = -cos(pi (1-r))
  farey::Fraction rr = negate ? r.complement() : r;
  long w = p.bits + 8;
  Ball arg = pi_scaled(rr.num(), rr.den(), w);
  Ball out(w);
  int t = mpfr_cos(BallOps::mid(out), arg.mid(), MPFR_RNDN);
  mpfr_set(BallOps::rad(out), arg.rad(), MPFR_RNDU);
  BallOps::rad_add_ulp(out, t);
  return negate ? ball_neg(out) : out;
}

namespace {

// ln of an exact positive integer: input representable exactly, result
// one rounding away.
Ball log_of_bigint(const BigInt& a, long w) {
  assert(a > 0);
  if (a == 1) return Ball::exact_int(0, w);
  mpfr_t t;
  mpfr_init2(t, std::max<mpfr_prec_t>(w, static_cast<mpfr_prec_t>(mpz_sizeinbase(a.get_mpz_t(), 2)) + 2));
  int exact = mpfr_set_z(t, a.get_mpz_t(), MPFR_RNDN);
  assert(exact == 0);
  (void)exact;
  Ball out(w);
  int tern = mpfr_log(BallOps::mid(out), t, MPFR_RNDN);
  BallOps::rad_add_ulp(out, tern);
  mpfr_clear(t);
  return out;
}

Ball log_of_fraction(const BigInt& num, const BigInt& den, long w) {
  return ball_sub(log_of_bigint(num, w), log_of_bigint(den, w));
}

}  // namespace

Ball ln_gamma_frac(const farey::Fraction& r, Precision p) {
  if (r.num() == 0) throw std::domain_error("ln_gamma_frac: pole at r = 0");
  if (r.num() == r.den()) return Ball::exact_int(0, p.bits);

  const long w = p.bits + 32;
  const long m = std::max<long>(10, (p.bits + 7) / 8);  // shift target, z = r + m > m
  const BigInt num(static_cast<long>(r.num()));
  const BigInt den(static_cast<long>(r.den()));
  const BigInt znum = num + m * den;

  // Stirling at z = znum/den:
  //   ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum_j B_2j/((2j)(2j-1) z^(2j-1))
  Ball zb = Ball::from_fraction(znum, den, w);
  Ball lnz = log_of_fraction(znum, den, w);
  Ball acc = ball_mul(ball_sub(zb, exact_half_signed(1, w)), lnz);
  acc = ball_sub(acc, zb);
  {
    Ball ln2(w);
    int t = mpfr_const_log2(BallOps::mid(ln2), MPFR_RNDN);
    BallOps::rad_add_ulp(ln2, t);
    Ball ln2pi = ball_add(ln2, ball_log(pi_ball(Precision(w))));
    acc = ball_add(acc, ball_mul_2exp(ln2pi, -1));
  }

  Ball inv_z = Ball::from_fraction(den, znum, w);
  Ball inv_z2 = ball_mul(inv_z, inv_z);
  Ball zpow = inv_z;  // z^-(2j-1)

  mpfr_t term_hi, prev_hi, threshold;
  mpfr_init2(term_hi, kRadiusPrec);
  mpfr_init2(prev_hi, kRadiusPrec);
  mpfr_init2(threshold, kRadiusPrec);
  mpfr_set_inf(prev_hi, 1);
  mpfr_set_ui_2exp(threshold, 1, -(p.bits + 16), MPFR_RNDN);
  for (int j = 1;; ++j) {
    mpq_class c = bernoulli_2j(j) / mpq_class(2 * j * (2 * j - 1));
    Ball term = ball_mul(Ball::from_mpq(c, w), zpow);
    BallOps::ball_mag_upper(term_hi, term);
    if (mpfr_cmp(term_hi, threshold) <= 0 || mpfr_cmp(term_hi, prev_hi) >= 0) {
      // stop before adding; remainder <= 2 * |first omitted term|
      mpfr_mul_2si(term_hi, term_hi, 1, MPFR_RNDU);
      BallOps::rad_add(acc, term_hi);
      break;
    }
    acc = ball_add(acc, term);
    mpfr_set(prev_hi, term_hi, MPFR_RNDU);
    zpow = ball_mul(zpow, inv_z2);
  }
  mpfr_clear(term_hi);
  mpfr_clear(prev_hi);
  mpfr_clear(threshold);

  // shift back down: ln Gamma(r) = ln Gamma(z) - ln P + m ln(den),
  // P = prod_{j=0}^{m-1} (num + j den)
  BigInt prod = 1;
  for (long j = 0; j < m; ++j) prod *= num + j * den;
  acc = ball_sub(acc, log_of_bigint(prod, w));
  if (den != 1) acc = ball_add(acc, ball_scale_by_int(log_of_bigint(den, w), m));
  return acc;
}

}  // namespace fareylcm::hpreal
