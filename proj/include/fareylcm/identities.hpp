#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fareylcm/hpreal.hpp"
#include "fareylcm/numtheory.hpp"

namespace fareylcm::identities {

// The catalog of verified identities. Left-hand sides are certified ball
// products over sines, cosines or log-Gamma values; right-hand sides are
// exact integers or rationals from the number-theory oracles.
enum class Equation {
  E1,      // prod_{k coprime n} Gamma(k/n)^2 / 2pi            = 1 | 1/p
  E2,      // prod_{r in F(n), 0<r<1} 2pi / Gamma(r)^2         = LCM(n)
  E3,      // (prod_{r in F(n), 0<r<=1/2} 2 sin(pi r))^2 / 2   = LCM(n)
  E4,      // prod_{k coprime n} 2 sin(pi k/n)                 = 1 | p
  E7,      // prod_{0<k<n} sin(pi k/n) * 2^(n-1)               = n
  E8,      // coprime product * non-coprime product            = n
  E9,      // prod_{k noncoprime n} 2 sin(pi k/n)              = n | n/p
  E10,     // same product                                     = lcm of proper divisors
  E11,     // prod_{k noncoprime n} 2pi / Gamma(k/n)^2         = lcm of proper divisors
  E12,     // prod_{k coprime n} 2|cos(pi k/n)|                = p if n=2p^a else 1
  E12F,    // (prod_{r in F(n), 0<r<1/2} 2 cos(pi r))^2        = LCM(floor(n/2))
  E13,     // prod_{1<=k<=floor(n/2)} 2 cos(pi k/n)            = 1 odd | 0 even
  PHI_M1,  // prod_{k coprime n} 2|cos(pi k/n)|                = |Phi_n(-1)|
  E14,     // sqrt(N) prod_{0<k<=N} Gamma(k/N) = (2pi)^(phi/2), N = phi(n)+1
  GCI,     // prod_{k coprime n} Gamma(k/n) = sqrt(N) prod_{0<k<N} Gamma(k/N)
  GUT,     // LCM(n)/LCM(n-1) = p if n=p^a else 1 (exact integers)
};

std::optional<Equation> parse_equation(std::string_view name);
std::string_view equation_name(Equation eq);
std::string_view equation_description(Equation eq);
std::vector<Equation> all_equations();

enum class Status { Verified, Failed, Skipped };
std::string_view status_name(Status s);

// Adaptive precision policy: evaluation starts at
// max(initial_bits, plan_precision(n, factors)) and doubles on a missing
// certificate until max_bits (0 = sixteen times the starting bits).
// initial_bits also serves as the E14/GCI target precision p: their
// log-difference balls must shrink below 2^(-p/2).
struct PrecisionPlan {
  long initial_bits = 64;
  long max_bits = 0;
};

struct BallSummary {
  std::string midpoint;   // ~20 significant digits
  long radius_exp2 = 0;   // radius <= 2^this; meaningless when exact
  bool exact = false;
};

// Per-(equation, n) verification outcome with certificate data.
struct IdentityReport {
  Equation equation = Equation::E4;
  std::int64_t n = 0;
  Status status = Status::Skipped;
  std::string value;  // certified value: decimal integer, "1/p", or "0"
  std::string rhs;    // exact right-hand side it was checked against
  BallSummary lhs;
  long bits_used = 0;
  long factor_count = 0;
  int retries = 0;
  double elapsed_ms = 0.0;
  std::string detail;  // skip reason / failure diagnostics
};

// initial_bits = 64 + ceil(1.5 n) + ceil(log2(factor_count + 1)), sized
// from ln LCM(n) ~ n so that LCM-sized products keep an absolute error
// below the rounding certificate threshold.
hpreal::Precision plan_precision(std::int64_t n, std::int64_t factor_count);

IdentityReport verify_one(Equation eq, std::int64_t n, const PrecisionPlan& plan = {});

// One report per n in [lo, hi]; out-of-window n are Skipped. Results are
// deterministic regardless of worker count (each n is evaluated by a
// single worker; reports are ordered by n).
std::vector<IdentityReport> verify_range(Equation eq, std::int64_t lo, std::int64_t hi,
                                         const PrecisionPlan& plan = {}, int workers = 1);

IdentityReport martin_gamma_ratio(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport lcm_via_farey_gamma(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport lcm_via_farey_sine(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport product_sine_coprime(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport product_sin_all_check(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport partition_identity_check(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport product_sine_noncoprime(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport lcm_bar_via_sine(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport lcm_bar_via_gamma(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport product_cos_coprime(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport lcm_half_via_farey_cos(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport cos_half_product(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport phi_minus1_product_check(std::int64_t n, const PrecisionPlan& plan = {});
IdentityReport multiplication_theorem_check(std::int64_t n, hpreal::Precision p);
IdentityReport gamma_coprime_identity_check(std::int64_t n, hpreal::Precision p);
IdentityReport gut_ratio_check(std::int64_t n);

}  // namespace fareylcm::identities
