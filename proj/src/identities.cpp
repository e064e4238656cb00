#include "fareylcm/identities.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fareylcm/cyclotomic.hpp"
#include "fareylcm/farey.hpp"

namespace fareylcm::identities {

namespace {

using farey::Fraction;
using hpreal::Ball;
using hpreal::Precision;

struct EquationInfo {
  Equation eq;
  const char* name;
  const char* description;
};

constexpr EquationInfo kCatalog[] = {
    {Equation::E1, "E1", "coprime Gamma ratio: prod Gamma(k/n)^2/(2pi) = 1 or 1/p"},
    {Equation::E2, "E2", "LCM(n) as the Farey Gamma product prod 2pi/Gamma(r)^2"},
    {Equation::E3, "E3", "LCM(n) as half the squared half-range Farey sine product"},
    {Equation::E4, "E4", "coprime sine product = p for n = p^a, else 1"},
    {Equation::E7, "E7", "full sine product times 2^(n-1) = n"},
    {Equation::E8, "E8", "coprime times non-coprime sine product = n"},
    {Equation::E9, "E9", "non-coprime sine product = n/p for n = p^a, else n"},
    {Equation::E10, "E10", "non-coprime sine product = lcm of proper divisors"},
    {Equation::E11, "E11", "non-coprime Gamma product = lcm of proper divisors"},
    {Equation::E12, "E12", "coprime cosine product = p for n = 2p^a, else 1"},
    {Equation::E12F, "E12F", "squared half-range Farey cosine product = LCM(floor(n/2))"},
    {Equation::E13, "E13", "half-range cosine product = 1 (n odd) or 0 (n even)"},
    {Equation::PHI_M1, "PHI_M1", "coprime cosine product = |Phi_n(-1)|"},
    {Equation::E14, "E14", "Gauss multiplication theorem at m = phi(n)+1"},
    {Equation::GCI, "GCI", "coprime Gamma product = sqrt(N) prod Gamma(k/N), N = phi(n)+1"},
    {Equation::GUT, "GUT", "LCM(n)/LCM(n-1) = p for n = p^a, else 1"},
};

const EquationInfo& info(Equation eq) {
  for (const auto& e : kCatalog) {
    if (e.eq == eq) return e;
  }
  throw std::logic_error("unknown equation");
}

std::int64_t ceil_log2(std::int64_t x) {  // x >= 1
  std::int64_t e = 0;
  while ((std::int64_t{1} << e) < x) ++e;
  return e;
}

// --- window checks: each identity carries its own validity annotation ---

bool in_window(Equation eq, std::int64_t n, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  switch (eq) {
    case Equation::E4:
      return n >= 0 || fail("defined for n >= 0");
    case Equation::E9:
    case Equation::E10:
    case Equation::E11:
      return n >= 1 || fail("defined for n >= 1");
    case Equation::E1:
    case Equation::E2:
    case Equation::E3:
    case Equation::E7:
    case Equation::E8:
    case Equation::E12F:
    case Equation::E13:
    case Equation::E14:
      return n >= 2 || fail("defined for n >= 2");
    case Equation::E12:
    case Equation::PHI_M1:
    case Equation::GUT:
      return n >= 3 || fail("defined for n > 2");
    case Equation::GCI:
      if (n < 2) return fail("defined for n >= 2");
      if (numtheory::classify_prime_power(n).is_prime_power) {
        return fail("holds only for n that are not prime powers");
      }
      return true;
  }
  return false;
}

std::int64_t factor_count(Equation eq, std::int64_t n) {
  switch (eq) {
    case Equation::E1:
    case Equation::E12:
    case Equation::PHI_M1:
      return numtheory::totient(n);
    case Equation::E2:
      return farey::farey_count(n) - 2;
    case Equation::E3:
      return (farey::farey_count(n) - 1) / 2;
    case Equation::E12F:
      return (farey::farey_count(n) - 3) / 2;
    case Equation::E4:
      return n <= 1 ? 0 : numtheory::totient(n);
    case Equation::E7:
    case Equation::E8:
      return n - 1;
    case Equation::E9:
    case Equation::E10:
    case Equation::E11:
      return n <= 1 ? 0 : n - 1 - numtheory::totient(n);
    case Equation::E13:
      return n / 2;
    case Equation::E14:
      return numtheory::totient(n) + 1;
    case Equation::GCI:
      return 2 * numtheory::totient(n);
    case Equation::GUT:
      return 0;
  }
  return 0;
}

// --- ball product helpers at a raw working precision w ---

Ball one(long w) { return Ball::exact_int(1, w); }

Ball two_sin(const Fraction& r, long w) {
  return hpreal::ball_mul_2exp(hpreal::sin_pi_frac(r, Precision(w)), 1);
}

Ball two_abs_cos(const Fraction& r, long w) {
  return hpreal::ball_abs(hpreal::ball_mul_2exp(hpreal::cos_pi_frac(r, Precision(w)), 1));
}

Ball two_cos(const Fraction& r, long w) {
  return hpreal::ball_mul_2exp(hpreal::cos_pi_frac(r, Precision(w)), 1);
}

Ball ln_two_pi(long w) {
  Ball two = Ball::exact_int(2, w);
  return hpreal::ball_log(hpreal::ball_mul(two, hpreal::pi_ball(Precision(w))));
}

Ball sine_product_coprime(std::int64_t n, long w) {
  Ball acc = one(w);
  for (std::int64_t k : numtheory::coprime_residues(n)) {
    acc = hpreal::ball_mul(acc, two_sin(Fraction::reduced(k, n), w));
  }
  return acc;
}

Ball sine_product_noncoprime(std::int64_t n, long w) {
  Ball acc = one(w);
  for (std::int64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) continue;
    acc = hpreal::ball_mul(acc, two_sin(Fraction::reduced(k, n), w));
  }
  return acc;
}

Ball cos_product_coprime(std::int64_t n, long w) {
  Ball acc = one(w);
  for (std::int64_t k : numtheory::coprime_residues(n)) {
    acc = hpreal::ball_mul(acc, two_abs_cos(Fraction::reduced(k, n), w));
  }
  return acc;
}

// sum over noncoprime/coprime k of (ln 2pi - 2 ln Gamma(k/n)) style terms
Ball gamma_log_sum(std::int64_t n, bool coprime_side, bool gamma_over_2pi, long w) {
  Ball l2p = ln_two_pi(w);
  Ball acc = Ball::exact_int(0, w);
  for (std::int64_t k = 1; k < n; ++k) {
    bool cop = std::gcd(k, n) == 1;
    if (cop != coprime_side) continue;
    Ball lg2 = hpreal::ball_mul_2exp(hpreal::ln_gamma_frac(Fraction::reduced(k, n), Precision(w)), 1);
    acc = hpreal::ball_add(acc, gamma_over_2pi ? hpreal::ball_sub(lg2, l2p)
                                               : hpreal::ball_sub(l2p, lg2));
  }
  return acc;
}

// rad(b) < 1/m, decided exactly on the dyadic radius
bool rad_less_than_inv(const Ball& b, const BigInt& m) {
  if (b.is_exact()) return true;
  BigInt mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), b.rad());
  mant = abs(mant);
  BigInt lhs = mant * m;
  if (e >= 0) return false;  // rad >= 1/2 here, never < 1/m
  BigInt rhs = 1;
  rhs <<= static_cast<unsigned long>(-e);
  return lhs < rhs;
}

BallSummary summarize(const Ball& b) {
  return BallSummary{b.midpoint_str(20), b.radius_exp2(), b.is_exact()};
}

enum class Outcome { Verified, Retry, HardFail };

// Shared certification path: a ball that must round exactly to `expected`.
Outcome certify_integer(const Ball& ball, const BigInt& expected, IdentityReport& rep) {
  rep.lhs = summarize(ball);
  rep.rhs = expected.get_str();
  auto cert = hpreal::round_to_integer(ball);
  if (!cert) return Outcome::Retry;
  rep.value = cert->get_str();
  if (*cert != expected) {
    rep.detail = "certified integer " + rep.value + " does not match exact value " + rep.rhs;
    return Outcome::HardFail;
  }
  return Outcome::Verified;
}

Outcome attempt(Equation eq, std::int64_t n, long bits, long target_bits, IdentityReport& rep) {
  using numtheory::classify_prime_power;
  using numtheory::lcm_upto;
  switch (eq) {
    case Equation::E3: {
      Ball prod = one(bits);
      for (Fraction r : farey::farey_half(n, true)) {
        prod = hpreal::ball_mul(prod, two_sin(r, bits));
      }
      Ball v = hpreal::ball_mul_2exp(hpreal::ball_mul(prod, prod), -1);
      return certify_integer(v, lcm_upto(n), rep);
    }
    case Equation::E2: {
      Ball l2p = ln_two_pi(bits);
      Ball s = Ball::exact_int(0, bits);
      for (Fraction r : farey::farey_sequence(n)) {
        if (r.num() == 0 || r.num() == r.den()) continue;  // 0 < r < 1
        Ball lg2 = hpreal::ball_mul_2exp(hpreal::ln_gamma_frac(r, Precision(bits)), 1);
        s = hpreal::ball_add(s, hpreal::ball_sub(l2p, lg2));
      }
      Ball v = hpreal::ball_exp(s);
      return certify_integer(v, lcm_upto(n), rep);
    }
    case Equation::E1: {
      Ball s = gamma_log_sum(n, true, /*gamma_over_2pi=*/true, bits);
      Ball v = hpreal::ball_exp(s);
      auto cls = classify_prime_power(n);
      BigInt p = cls.is_prime_power ? BigInt(cls.prime) : BigInt(1);
      Ball vp = hpreal::ball_scale_by_int(v, p);
      rep.lhs = summarize(v);
      rep.rhs = cls.is_prime_power ? "1/" + p.get_str() : "1";
      auto cert = hpreal::round_to_integer(vp);
      if (!cert) return Outcome::Retry;
      if (*cert != 1) {
        rep.value = cert->get_str() + (cls.is_prime_power ? "/" + p.get_str() : "");
        rep.detail = "scaled product rounds to " + cert->get_str() + ", expected 1";
        return Outcome::HardFail;
      }
      if (!v.contains_fraction(BigInt(1), p)) {
        rep.detail = "ball does not enclose " + rep.rhs;
        return Outcome::HardFail;
      }
      if (!rad_less_than_inv(v, 4 * p * p)) return Outcome::Retry;  // radius < 1/(4p^2)
      rep.value = rep.rhs;
      return Outcome::Verified;
    }
    case Equation::E4: {
      Ball prod = n <= 1 ? one(bits) : sine_product_coprime(n, bits);
      auto cls = n >= 2 ? classify_prime_power(n) : numtheory::PrimePowerClass{};
      BigInt expected = cls.is_prime_power ? BigInt(cls.prime) : BigInt(1);
      return certify_integer(prod, expected, rep);
    }
    case Equation::E7: {
      Ball prod = one(bits);
      for (std::int64_t k = 1; k < n; ++k) {
        prod = hpreal::ball_mul(prod, hpreal::sin_pi_frac(Fraction::reduced(k, n), Precision(bits)));
      }
      Ball v = hpreal::ball_mul_2exp(prod, n - 1);
      return certify_integer(v, BigInt(static_cast<long>(n)), rep);
    }
    case Equation::E8: {
      Ball v = hpreal::ball_mul(sine_product_coprime(n, bits), sine_product_noncoprime(n, bits));
      return certify_integer(v, BigInt(static_cast<long>(n)), rep);
    }
    case Equation::E9: {
      Ball prod = n <= 1 ? one(bits) : sine_product_noncoprime(n, bits);
      BigInt expected(static_cast<long>(n));
      if (n >= 2) {
        auto cls = classify_prime_power(n);
        if (cls.is_prime_power) expected = n / cls.prime;
      } else {
        expected = 1;  // empty product
      }
      return certify_integer(prod, expected, rep);
    }
    case Equation::E10: {
      Ball prod = n <= 1 ? one(bits) : sine_product_noncoprime(n, bits);
      return certify_integer(prod, numtheory::lcm_bar(n), rep);
    }
    case Equation::E11: {
      if (n <= 1) return certify_integer(one(bits), BigInt(1), rep);
      Ball s = gamma_log_sum(n, /*coprime_side=*/false, /*gamma_over_2pi=*/false, bits);
      Ball v = hpreal::ball_exp(s);
      return certify_integer(v, numtheory::lcm_bar(n), rep);
    }
    case Equation::E12: {
      Ball prod = cos_product_coprime(n, bits);
      auto tpp = numtheory::classify_twice_prime_power(n);
      BigInt expected = tpp ? BigInt(tpp->prime) : BigInt(1);
      return certify_integer(prod, expected, rep);
    }
    case Equation::PHI_M1: {
      Ball prod = cos_product_coprime(n, bits);
      BigInt expected(static_cast<long>(std::abs(cyclotomic::phi_at_minus1(n))));
      return certify_integer(prod, expected, rep);
    }
    case Equation::E12F: {
      Ball prod = one(bits);
      for (Fraction r : farey::farey_half(n, false)) {
        prod = hpreal::ball_mul(prod, two_cos(r, bits));
      }
      Ball v = hpreal::ball_mul(prod, prod);
      return certify_integer(v, lcm_upto(n / 2), rep);
    }
    case Equation::E13: {
      if (n % 2 != 0) {
        Ball prod = one(bits);
        for (std::int64_t k = 1; k <= n / 2; ++k) {
          prod = hpreal::ball_mul(prod, two_cos(Fraction::reduced(k, n), bits));
        }
        return certify_integer(prod, BigInt(1), rep);
      }
      // even n: the factor at k = n/2 is a structural exact zero; the
      // remaining factors, squared over the full range, give n/2
      Ball zero = Ball::exact_int(0, bits);
      rep.lhs = summarize(zero);
      rep.rhs = "0";
      Ball rest = one(bits);
      for (std::int64_t k = 1; k < n / 2; ++k) {
        rest = hpreal::ball_mul(rest, two_cos(Fraction::reduced(k, n), bits));
      }
      Ball v = hpreal::ball_mul(rest, rest);
      IdentityReport aux;
      Outcome out = certify_integer(v, BigInt(static_cast<long>(n / 2)), aux);
      if (out == Outcome::Verified) {
        rep.value = "0";
        rep.detail = "zero factor at k = n/2; remaining factors square to " + aux.value;
      } else {
        rep.value = aux.value;
        rep.detail = "zero-factor-excluded product: " + aux.detail;
      }
      return out;
    }
    case Equation::E14: {
      std::int64_t phi = numtheory::totient(n);
      std::int64_t N = phi + 1;
      Ball lhs = hpreal::ball_mul_2exp(hpreal::ball_log(Ball::exact_int(static_cast<long>(N), bits)), -1);
      for (std::int64_t k = 1; k <= N; ++k) {
        lhs = hpreal::ball_add(lhs, hpreal::ln_gamma_frac(Fraction::reduced(k, N), Precision(bits)));
      }
      Ball rhs = hpreal::ball_mul_2exp(hpreal::ball_scale_by_int(ln_two_pi(bits), static_cast<long>(phi)), -1);
      Ball diff = hpreal::ball_sub(lhs, rhs);
      rep.lhs = summarize(diff);
      rep.rhs = "0 (log-scale difference)";
      rep.value = "0";
      if (!diff.contains_zero()) {
        rep.detail = "difference ball excludes zero";
        return Outcome::HardFail;
      }
      if (!diff.radius_less_than_2exp(-(target_bits / 2))) return Outcome::Retry;
      return Outcome::Verified;
    }
    case Equation::GCI: {
      std::int64_t N = numtheory::totient(n) + 1;
      Ball lhs = Ball::exact_int(0, bits);
      for (std::int64_t k : numtheory::coprime_residues(n)) {
        lhs = hpreal::ball_add(lhs, hpreal::ln_gamma_frac(Fraction::reduced(k, n), Precision(bits)));
      }
      Ball rhs = hpreal::ball_mul_2exp(hpreal::ball_log(Ball::exact_int(static_cast<long>(N), bits)), -1);
      for (std::int64_t k = 1; k < N; ++k) {
        rhs = hpreal::ball_add(rhs, hpreal::ln_gamma_frac(Fraction::reduced(k, N), Precision(bits)));
      }
      Ball diff = hpreal::ball_sub(lhs, rhs);
      rep.lhs = summarize(diff);
      rep.rhs = "0 (log-scale difference)";
      rep.value = "0";
      if (!diff.contains_zero()) {
        rep.detail = "difference ball excludes zero";
        return Outcome::HardFail;
      }
      if (!diff.radius_less_than_2exp(-(target_bits / 2))) return Outcome::Retry;
      return Outcome::Verified;
    }
    default:
      throw std::logic_error("attempt: unhandled equation");
  }
}

IdentityReport run_gut(std::int64_t n) {
  IdentityReport rep;
  rep.equation = Equation::GUT;
  rep.n = n;
  BigInt hi = numtheory::lcm_upto(n);
  BigInt lo = numtheory::lcm_upto(n - 1);
  BigInt q = hi / lo;  // always divides: LCM(n-1) | LCM(n)
  auto cls = numtheory::classify_prime_power(n);
  BigInt expected = cls.is_prime_power ? BigInt(cls.prime) : BigInt(1);
  rep.value = q.get_str();
  rep.rhs = expected.get_str();
  rep.status = (q == expected) ? Status::Verified : Status::Failed;
  if (rep.status == Status::Failed) rep.detail = "exact quotient does not match classification";
  return rep;
}

}  // namespace

std::optional<Equation> parse_equation(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (name == e.name) return e.eq;
  }
  return std::nullopt;
}

std::string_view equation_name(Equation eq) { return info(eq).name; }

std::string_view equation_description(Equation eq) { return info(eq).description; }

std::vector<Equation> all_equations() {
  std::vector<Equation> out;
  for (const auto& e : kCatalog) out.push_back(e.eq);
  return out;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Failed: return "Failed";
    case Status::Skipped: return "Skipped";
  }
  return "?";
}

hpreal::Precision plan_precision(std::int64_t n, std::int64_t factor_count) {
  if (n < 0 || factor_count < 0) throw std::invalid_argument("plan_precision: negative input");
  long bits = 64 + static_cast<long>((3 * n + 1) / 2) + static_cast<long>(ceil_log2(factor_count + 1));
  return hpreal::Precision(bits);
}

IdentityReport verify_one(Equation eq, std::int64_t n, const PrecisionPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.equation = eq;
  rep.n = n;
  std::string why;
  if (!in_window(eq, n, &why)) {
    rep.status = Status::Skipped;
    rep.detail = why;
    return rep;
  }
  if (eq == Equation::GUT) {
    rep = run_gut(n);
  } else {
    rep.factor_count = factor_count(eq, n);
    long start_bits;
    long target_bits = 0;
    if (eq == Equation::E14 || eq == Equation::GCI) {
      // requested precision plus guard bits; the pass threshold stays
      // pinned to the requested precision
      target_bits = std::max(64L, plan.initial_bits);
      start_bits = target_bits + 64;
    } else {
      start_bits = std::max(plan.initial_bits, plan_precision(n, rep.factor_count).bits);
    }
    long cap = plan.max_bits > 0 ? plan.max_bits : 16 * start_bits;
    rep.status = Status::Failed;
    if (start_bits > cap) {
      rep.detail = "max_bits = " + std::to_string(cap) + " is below the planned starting precision " +
                   std::to_string(start_bits);
    }
    for (long bits = start_bits; bits <= cap; bits *= 2) {
      rep.bits_used = bits;
      Outcome out = attempt(eq, n, bits, target_bits, rep);
      if (out == Outcome::Verified) {
        rep.status = Status::Verified;
        break;
      }
      if (out == Outcome::HardFail) {
        rep.status = Status::Failed;
        break;
      }
      ++rep.retries;
      if (bits * 2 > cap) {
        rep.detail = "no rounding certificate within max_bits = " + std::to_string(cap);
      }
    }
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<IdentityReport> verify_range(Equation eq, std::int64_t lo, std::int64_t hi,
                                         const PrecisionPlan& plan, int workers) {
  if (lo > hi) return {};
  auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<IdentityReport> out(count);
  if (workers < 1) workers = 1;
  if (workers > 1 && !mpfr_buildopt_tls_p()) workers = 1;  // shared MPFR caches
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = verify_one(eq, lo + static_cast<std::int64_t>(i), plan);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = verify_one(eq, lo + static_cast<std::int64_t>(i), plan);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

IdentityReport martin_gamma_ratio(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E1, n, plan);
}
IdentityReport lcm_via_farey_gamma(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E2, n, plan);
}
IdentityReport lcm_via_farey_sine(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E3, n, plan);
}
IdentityReport product_sine_coprime(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E4, n, plan);
}
IdentityReport product_sin_all_check(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E7, n, plan);
}
IdentityReport partition_identity_check(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E8, n, plan);
}
IdentityReport product_sine_noncoprime(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E9, n, plan);
}
IdentityReport lcm_bar_via_sine(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E10, n, plan);
}
IdentityReport lcm_bar_via_gamma(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E11, n, plan);
}
IdentityReport product_cos_coprime(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E12, n, plan);
}
IdentityReport lcm_half_via_farey_cos(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E12F, n, plan);
}
IdentityReport cos_half_product(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::E13, n, plan);
}
IdentityReport phi_minus1_product_check(std::int64_t n, const PrecisionPlan& plan) {
  return verify_one(Equation::PHI_M1, n, plan);
}
IdentityReport multiplication_theorem_check(std::int64_t n, hpreal::Precision p) {
  PrecisionPlan plan;
  plan.initial_bits = p.bits;
  return verify_one(Equation::E14, n, plan);
}
IdentityReport gamma_coprime_identity_check(std::int64_t n, hpreal::Precision p) {
  PrecisionPlan plan;
  plan.initial_bits = p.bits;
  return verify_one(Equation::GCI, n, plan);
}
IdentityReport gut_ratio_check(std::int64_t n) { return verify_one(Equation::GUT, n); }

}  // namespace fareylcm::identities
