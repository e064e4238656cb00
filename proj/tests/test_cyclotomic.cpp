#include <doctest.h>

#include "fareylcm/cyclotomic.hpp"
#include "fareylcm/numtheory.hpp"

using namespace fareylcm;
using namespace fareylcm::cyclotomic;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

std::vector<std::int64_t> all_divisors(std::int64_t n) {
  auto d = numtheory::proper_divisors(n);
  d.push_back(n);
  return d;
}

}  // namespace

TEST_CASE("IntPoly arithmetic") {
  auto a = poly({-1, 1});       // X - 1
  auto b = poly({1, 1});        // X + 1
  CHECK(a * b == poly({-1, 0, 1}));
  CHECK(IntPoly::exact_div(poly({-1, 0, 1}), a) == b);
  CHECK_THROWS_AS(IntPoly::exact_div(poly({1, 1, 1}), a), std::logic_error);
  CHECK(poly({1, 2}).compose_x_pow(3) == poly({1, 0, 0, 2}));
  CHECK(IntPoly::x_pow_minus_1(3) == poly({-1, 0, 0, 1}));
  CHECK(a.eval(BigInt(1)) == 0);
  CHECK(poly({1, -1, 1}).eval(BigInt(-1)) == 3);
  CHECK(a.str() == "-1 1");
}

TEST_CASE("cyclotomic_poly small cases") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));  // X^4 - X^2 + 1
  CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("eval_int examples") {
  CHECK(eval_int(cyclotomic_poly(1), BigInt(1)) == 0);
  CHECK(eval_int(cyclotomic_poly(6), BigInt(-1)) == 3);
  CHECK(eval_int(cyclotomic_poly(12), BigInt(1)) == 1);
}

TEST_CASE("Phi_105 has coefficient -2 at degree 7") {
  auto p = cyclotomic_poly(105);
  CHECK(p.degree() == 48);
  CHECK(p.coeff(7) == -2);
}

TEST_CASE("product of Phi_d over d | n is X^n - 1") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    IntPoly prod = poly({1});
    for (std::int64_t d : all_divisors(n)) {
      prod = prod * cyclotomic_poly(d);
    }
    CHECK(prod == IntPoly::x_pow_minus_1(n));
  }
}

TEST_CASE("prime recursion identities") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t p : {2, 3, 5}) {
      if (n * p > 200) continue;
      auto np = cyclotomic_poly(n * p);
      auto base = cyclotomic_poly(n);
      if (n % p == 0) {
        CHECK(np == base.compose_x_pow(p));
      } else {
        CHECK(np * base == base.compose_x_pow(p));
      }
    }
  }
}

TEST_CASE("recursion path agrees with divisor-product path") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(cyclotomic_poly_via_recursion(n) == cyclotomic_poly(n));
  }
}

TEST_CASE("degree equals totient") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(cyclotomic_poly(n).degree() == numtheory::totient(n));
  }
}

TEST_CASE("phi_at_1 closed form") {
  CHECK(phi_at_1(1) == 0);
  CHECK(phi_at_1(2) == 2);
  CHECK(phi_at_1(8) == 2);
  CHECK(phi_at_1(12) == 1);
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(BigInt(static_cast<long>(phi_at_1(n))) == eval_int(cyclotomic_poly(n), BigInt(1)));
  }
}

TEST_CASE("phi_at_minus1 closed form") {
  CHECK(phi_at_minus1(1) == -2);
  CHECK(phi_at_minus1(2) == 0);
  CHECK(phi_at_minus1(6) == 3);
  CHECK(phi_at_minus1(9) == 1);
  CHECK(phi_at_minus1(4) == 2);
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(BigInt(static_cast<long>(phi_at_minus1(n))) == eval_int(cyclotomic_poly(n), BigInt(-1)));
  }
}
