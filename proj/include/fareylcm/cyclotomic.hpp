#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fareylcm/numtheory.hpp"

namespace fareylcm::cyclotomic {

// Dense integer-coefficient polynomial, coeffs[i] = coefficient of X^i.
// Leading coefficient is nonzero except for the zero polynomial (empty
// coefficient list). All arithmetic is exact.
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly x_pow_minus_1(std::int64_t n);  // X^n - 1

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::int64_t i) const;  // 0 outside [0, degree]
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;  // Horner

  IntPoly compose_x_pow(std::int64_t p) const;  // P(X^p)

  // Quotient with a required zero remainder; a nonzero remainder or a
  // non-dividing leading coefficient throws std::logic_error.
  static IntPoly exact_div(const IntPoly& num, const IntPoly& den);

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string str() const;  // coefficients low-to-high, space separated

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// n-th cyclotomic polynomial by exact division of X^n - 1 by the product
// of Phi_d over proper divisors d | n. Throws if n < 1.
IntPoly cyclotomic_poly(std::int64_t n);

// Same polynomial through the prime recursion
//   Phi_{np}(X) = Phi_n(X^p)            if p | n
//   Phi_{np}(X) = Phi_n(X^p) / Phi_n(X) if p does not divide n
// starting from Phi_1 = X - 1. Kept as an independent cross-check path.
IntPoly cyclotomic_poly_via_recursion(std::int64_t n);

BigInt eval_int(const IntPoly& p, const BigInt& x);

// Phi_n(1) by classification alone: 0 for n = 1, p for n = p^alpha, else 1.
std::int64_t phi_at_1(std::int64_t n);

// Phi_n(-1) by classification alone: -2 for n = 1, 0 for n = 2,
// p for n = 2*p^alpha (powers of two included), else 1.
std::int64_t phi_at_minus1(std::int64_t n);

}  // namespace fareylcm::cyclotomic
