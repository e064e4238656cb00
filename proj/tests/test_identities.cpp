#include <doctest.h>

#include "fareylcm/cyclotomic.hpp"
#include "fareylcm/identities.hpp"

using namespace fareylcm;
using namespace fareylcm::identities;

namespace {

void check_verified(const IdentityReport& r, const std::string& value) {
  CHECK(r.status == Status::Verified);
  CHECK(r.value == value);
  CHECK(r.detail.find("does not match") == std::string::npos);
}

}  // namespace

TEST_CASE("plan_precision formula") {
  CHECK(plan_precision(0, 0).bits == 64);
  CHECK(plan_precision(10, 31).bits == 84);
  CHECK(plan_precision(300, 27399).bits == 529);
}

TEST_CASE("equation catalog") {
  CHECK(parse_equation("E4") == Equation::E4);
  CHECK(parse_equation("E12F") == Equation::E12F);
  CHECK(parse_equation("PHI_M1") == Equation::PHI_M1);
  CHECK(parse_equation("GCI") == Equation::GCI);
  CHECK(!parse_equation("E5").has_value());
  CHECK(equation_name(Equation::GUT) == "GUT");
  CHECK(all_equations().size() == 16);
}

TEST_CASE("E4 examples") {
  check_verified(product_sine_coprime(2), "2");
  check_verified(product_sine_coprime(12), "1");
  check_verified(product_sine_coprime(0), "1");  // empty product
  check_verified(product_sine_coprime(9), "3");
}

TEST_CASE("E9 examples") {
  check_verified(product_sine_noncoprime(1), "1");
  check_verified(product_sine_noncoprime(8), "4");
  check_verified(product_sine_noncoprime(12), "12");
}

TEST_CASE("E3 examples and oracle equivalence to n = 60") {
  check_verified(lcm_via_farey_sine(2), "2");
  check_verified(lcm_via_farey_sine(3), "6");
  check_verified(lcm_via_farey_sine(10), "2520");
  for (std::int64_t n = 2; n <= 60; ++n) {
    auto rep = lcm_via_farey_sine(n);
    CHECK(rep.status == Status::Verified);
    CHECK(rep.value == numtheory::lcm_upto(n).get_str());
  }
}

TEST_CASE("E2 examples and oracle equivalence to n = 40") {
  check_verified(lcm_via_farey_gamma(2), "2");
  check_verified(lcm_via_farey_gamma(4), "12");
  check_verified(lcm_via_farey_gamma(6), "60");
  for (std::int64_t n = 2; n <= 40; ++n) {
    auto rep = lcm_via_farey_gamma(n);
    CHECK(rep.status == Status::Verified);
    CHECK(rep.value == numtheory::lcm_upto(n).get_str());
  }
}

TEST_CASE("E1 examples") {
  check_verified(martin_gamma_ratio(12), "1");
  check_verified(martin_gamma_ratio(9), "1/3");
  check_verified(martin_gamma_ratio(2), "1/2");
  CHECK(martin_gamma_ratio(1).status == Status::Skipped);
}

TEST_CASE("E10/E11 examples") {
  check_verified(lcm_bar_via_sine(1), "1");
  check_verified(lcm_bar_via_sine(12), "12");
  check_verified(lcm_bar_via_sine(9), "3");
  check_verified(lcm_bar_via_gamma(1), "1");
  check_verified(lcm_bar_via_gamma(4), "2");
  check_verified(lcm_bar_via_gamma(12), "12");
}

TEST_CASE("E7 examples") {
  check_verified(product_sin_all_check(2), "2");
  check_verified(product_sin_all_check(4), "4");
  check_verified(product_sin_all_check(12), "12");
}

TEST_CASE("E8 examples") {
  check_verified(partition_identity_check(6), "6");
  check_verified(partition_identity_check(8), "8");
  check_verified(partition_identity_check(2), "2");
}

TEST_CASE("E12 examples") {
  check_verified(product_cos_coprime(10), "5");
  check_verified(product_cos_coprime(4), "2");
  check_verified(product_cos_coprime(15), "1");
  CHECK(product_cos_coprime(2).status == Status::Skipped);
}

TEST_CASE("E12F examples") {
  check_verified(lcm_half_via_farey_cos(5), "2");
  check_verified(lcm_half_via_farey_cos(4), "2");
  check_verified(lcm_half_via_farey_cos(2), "1");
  // both parities against the floor interpretation
  for (std::int64_t n = 2; n <= 40; ++n) {
    auto rep = lcm_half_via_farey_cos(n);
    CHECK(rep.status == Status::Verified);
    CHECK(rep.value == numtheory::lcm_upto(n / 2).get_str());
  }
}

TEST_CASE("E13 examples") {
  check_verified(cos_half_product(3), "1");
  check_verified(cos_half_product(5), "1");
  auto even = cos_half_product(4);
  CHECK(even.status == Status::Verified);
  CHECK(even.value == "0");
  CHECK(even.lhs.exact);  // structural zero, not a small ball
  CHECK(even.detail.find("square to 2") != std::string::npos);
}

TEST_CASE("PHI_M1 examples") {
  check_verified(phi_minus1_product_check(6), "3");
  check_verified(phi_minus1_product_check(12), "1");
  check_verified(phi_minus1_product_check(4), "2");
}

TEST_CASE("E14 examples") {
  hpreal::Precision p(128);
  for (std::int64_t n : {2, 3, 7}) {
    auto rep = multiplication_theorem_check(n, p);
    CHECK(rep.status == Status::Verified);
  }
}

TEST_CASE("GCI examples") {
  hpreal::Precision p(128);
  CHECK(gamma_coprime_identity_check(6, p).status == Status::Verified);
  CHECK(gamma_coprime_identity_check(10, p).status == Status::Verified);
  CHECK(gamma_coprime_identity_check(8, p).status == Status::Skipped);
}

TEST_CASE("GUT examples") {
  check_verified(gut_ratio_check(6), "1");
  check_verified(gut_ratio_check(9), "3");
  check_verified(gut_ratio_check(7), "7");
  CHECK(gut_ratio_check(2).status == Status::Skipped);
}

TEST_CASE("verify_range honors validity windows") {
  auto e4 = verify_range(Equation::E4, 0, 30);
  REQUIRE(e4.size() == 31);
  for (const auto& r : e4) CHECK(r.status == Status::Verified);

  auto e12 = verify_range(Equation::E12, 0, 30);
  REQUIRE(e12.size() == 31);
  for (const auto& r : e12) {
    if (r.n <= 2) {
      CHECK(r.status == Status::Skipped);
    } else {
      CHECK(r.status == Status::Verified);
    }
  }

  auto gci = verify_range(Equation::GCI, 2, 20);
  for (const auto& r : gci) {
    bool pp = numtheory::classify_prime_power(r.n).is_prime_power;
    CHECK(r.status == (pp ? Status::Skipped : Status::Verified));
  }
}

TEST_CASE("telescoping: E3(n) = E3(n-1) * E4(n) as certified integers") {
  BigInt prev = 0;
  for (std::int64_t n = 2; n <= 60; ++n) {
    auto e3 = lcm_via_farey_sine(n);
    REQUIRE(e3.status == Status::Verified);
    BigInt cur(e3.value);
    if (n >= 3) {
      auto e4 = product_sine_coprime(n);
      REQUIRE(e4.status == Status::Verified);
      CHECK(cur == prev * BigInt(e4.value));
    }
    prev = cur;
  }
}

TEST_CASE("dual consistency: E4(n) * E9(n) = n") {
  for (std::int64_t n = 2; n <= 100; ++n) {
    auto a = product_sine_coprime(n);
    auto b = product_sine_noncoprime(n);
    REQUIRE(a.status == Status::Verified);
    REQUIRE(b.status == Status::Verified);
    CHECK(BigInt(a.value) * BigInt(b.value) == n);
  }
}

TEST_CASE("cyclotomic bridge") {
  for (std::int64_t n = 2; n <= 80; ++n) {
    auto e4 = product_sine_coprime(n);
    CHECK(BigInt(e4.value) == cyclotomic::phi_at_1(n));
    if (n >= 3) {
      auto cm1 = phi_minus1_product_check(n);
      CHECK(BigInt(cm1.value) == std::abs(cyclotomic::phi_at_minus1(n)));
    }
  }
}

TEST_CASE("determinism: worker counts do not change certified values") {
  auto one = verify_range(Equation::E3, 2, 40, {}, 1);
  auto four = verify_range(Equation::E3, 2, 40, {}, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].n == four[i].n);
    CHECK(one[i].status == four[i].status);
    CHECK(one[i].value == four[i].value);
    CHECK(one[i].bits_used == four[i].bits_used);
  }
}

TEST_CASE("a too-small max_bits cap yields Failed, not a bogus certificate") {
  PrecisionPlan plan;
  plan.max_bits = 90;  // below plan_precision(40, ...) = 128
  auto rep = lcm_via_farey_sine(40, plan);
  CHECK(rep.status == Status::Failed);
  CHECK(rep.detail.find("max_bits") != std::string::npos);
  CHECK(rep.value.empty());
}

TEST_CASE("reports carry certificate metadata") {
  auto rep = lcm_via_farey_sine(10);
  CHECK(rep.bits_used == 84);  // plan_precision(10, 16): 64 + 15 + 5
  CHECK(rep.factor_count == 16);
  CHECK(rep.retries == 0);
  CHECK(rep.rhs == "2520");
  CHECK(!rep.lhs.midpoint.empty());
}
