#include "fareylcm/cyclotomic.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace fareylcm::cyclotomic {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_pow_minus_1(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("x_pow_minus_1: n must be >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(std::int64_t i) const {
  static const BigInt zero = 0;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPoly IntPoly::compose_x_pow(std::int64_t p) const {
  if (p < 1) throw std::invalid_argument("compose_x_pow: p must be >= 1");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(degree() * p) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i * static_cast<std::size_t>(p)] = coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::logic_error("exact_div: division by zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw std::logic_error("exact_div: nonzero remainder");
  std::vector<BigInt> rem = num.coeffs_;
  std::vector<BigInt> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
  const BigInt& lead = den.coeffs_.back();
  for (std::int64_t k = num.degree() - den.degree(); k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + den.degree())];
    if (top == 0) continue;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: leading coefficient does not divide");
    quo[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < den.coeffs_.size(); ++j) {
      rem[static_cast<std::size_t>(k) + j] -= q * den.coeffs_[j];
    }
  }
  for (const BigInt& c : rem) {
    if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
  }
  return IntPoly(std::move(quo));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

namespace {

const IntPoly& cyclo_memo(std::int64_t n, std::map<std::int64_t, IntPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IntPoly poly = IntPoly::x_pow_minus_1(n);
  for (std::int64_t d : numtheory::proper_divisors(n)) {
    poly = IntPoly::exact_div(poly, cyclo_memo(d, memo));
  }
  return memo.emplace(n, std::move(poly)).first->second;
}

}  // namespace

IntPoly cyclotomic_poly(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  std::map<std::int64_t, IntPoly> memo;  // per-call, so concurrent callers never share state
  return cyclo_memo(n, memo);
}

IntPoly cyclotomic_poly_via_recursion(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly_via_recursion: n must be >= 1");
  if (n == 1) return IntPoly({-1, 1});
  auto fact = numtheory::factorize(n);
  // Phi over the radical first, one new prime at a time.
  IntPoly poly({-1, 1});  // Phi_1
  std::int64_t radical = 1;
  for (const auto& pp : fact.factors) {
    poly = IntPoly::exact_div(poly.compose_x_pow(pp.prime), poly);
    radical *= pp.prime;
  }
  // Then Phi_n(X) = Phi_rad(X^(n/rad)) since every prime of n/rad divides rad.
  return poly.compose_x_pow(n / radical);
}

BigInt eval_int(const IntPoly& p, const BigInt& x) { return p.eval(x); }

std::int64_t phi_at_1(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("phi_at_1: n must be >= 1");
  if (n == 1) return 0;
  auto cls = numtheory::classify_prime_power(n);
  return cls.is_prime_power ? cls.prime : 1;
}

std::int64_t phi_at_minus1(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("phi_at_minus1: n must be >= 1");
  if (n == 1) return -2;
  if (n == 2) return 0;
  auto tpp = numtheory::classify_twice_prime_power(n);
  return tpp ? tpp->prime : 1;
}

}  // namespace fareylcm::cyclotomic
