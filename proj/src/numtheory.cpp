#include "fareylcm/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace fareylcm::numtheory {

std::int64_t Factorization::value() const {
  std::int64_t v = 1;
  for (const auto& pp : factors) {
    for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
  }
  return v;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigInt lcm_upto(std::int64_t n) {
  BigInt acc = 1;
  for (std::int64_t k = 2; k <= n; ++k) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return acc;
}

Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization f;
  auto strip = [&](std::int64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // remaining candidates are coprime to 6
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  if (n == 1) return 1;
  std::int64_t phi = n;
  for (const auto& pp : factorize(n).factors) {
    phi -= phi / pp.prime;
  }
  return phi;
}

std::vector<std::int64_t> totient_sieve(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("totient_sieve: limit must be >= 0");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
  for (std::int64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // p not prime
    for (std::int64_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

PrimePowerClass classify_prime_power(std::int64_t n) {
  if (n < 2) return {};
  auto f = factorize(n);
  if (f.factors.size() != 1) return {};
  return {true, f.factors[0].prime, f.factors[0].exponent};
}

std::optional<PrimePower> classify_twice_prime_power(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("classify_twice_prime_power: n must be >= 3");
  if (n % 2 != 0) return std::nullopt;
  auto half = classify_prime_power(n / 2);
  if (!half.is_prime_power) return std::nullopt;
  if (half.prime == 2) return PrimePower{2, half.exponent + 1};  // n = 2^(e+1)
  return PrimePower{half.prime, half.exponent};
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < n) low.push_back(d);
    std::int64_t q = n / d;
    if (q != d && q < n) high.push_back(q);
  }
  for (auto it = high.rbegin(); it != high.rend(); ++it) low.push_back(*it);
  return low;
}

BigInt lcm_bar(std::int64_t n) {
  BigInt acc = 1;
  for (std::int64_t d : proper_divisors(n)) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(d));
  }
  return acc;
}

std::vector<std::int64_t> coprime_residues(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("coprime_residues: n must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

}  // namespace fareylcm::numtheory
