#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace fareylcm {

// Arbitrary-precision signed integer. LCM(n) has ~1.44*n bits, far past
// any fixed-width type at the ranges we verify.
using BigInt = ::mpz_class;

namespace numtheory {

// One entry of a factorization: prime^exponent.
struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization, primes strictly ascending.
struct Factorization {
  std::vector<PrimePower> factors;

  // Multiplies the factorization back out.
  std::int64_t value() const;
};

// Classification of n: either n = p^alpha (exactly one prime divisor)
// or not. n in {0, 1} and multi-prime n are NotPrimePower.
struct PrimePowerClass {
  bool is_prime_power = false;
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePowerClass&, const PrimePowerClass&) = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// lcm{1,...,n}; 1 for n in {0, 1} (empty-product convention).
BigInt lcm_upto(std::int64_t n);

// Euler's totient. Rejects n < 1.
std::int64_t totient(std::int64_t n);

// phi(0..limit) by sieve; phi[0] = 0.
std::vector<std::int64_t> totient_sieve(std::int64_t limit);

// Trial-division factorization. Rejects n < 2.
Factorization factorize(std::int64_t n);

PrimePowerClass classify_prime_power(std::int64_t n);

// (p, alpha) iff n = 2*p^alpha with p prime. Pure powers of two are
// reported in full: n = 2^k (k >= 2) yields (2, k). Rejects n < 3.
std::optional<PrimePower> classify_twice_prime_power(std::int64_t n);

// All d with d | n and 0 < d < n, ascending. Empty for n in {0, 1}.
std::vector<std::int64_t> proper_divisors(std::int64_t n);

// lcm of the proper divisors of n; 1 when there are none.
BigInt lcm_bar(std::int64_t n);

// Ascending k with 0 < k < n and gcd(k, n) = 1. Empty for n = 1.
// Rejects n < 1.
std::vector<std::int64_t> coprime_residues(std::int64_t n);

}  // namespace numtheory
}  // namespace fareylcm
