#include <doctest.h>

#include "fareylcm/oeis.hpp"

using namespace fareylcm;
using namespace fareylcm::oeis;

TEST_CASE("parse_bfile tolerates comments, blanks and trailing whitespace") {
  std::string text =
      "# OEIS b-file\n"
      "\n"
      "0 1  \n"
      "1 1\t\n"
      "  2 2\r\n"
      "3 6\n";
  auto b = parse_bfile(text, "A003418");
  REQUIRE(b.entries.size() == 4);
  CHECK(b.entries[0].index == 0);
  CHECK(b.entries[3].value == 6);
}

TEST_CASE("parse_bfile rejects malformed input") {
  CHECK_THROWS_AS(parse_bfile("0 1\n0 2\n", "A003418"), std::runtime_error);   // non-increasing
  CHECK_THROWS_AS(parse_bfile("5 1\n3 2\n", "A003418"), std::runtime_error);   // decreasing
  CHECK_THROWS_AS(parse_bfile("abc\n", "A003418"), std::runtime_error);        // not a line
  CHECK_THROWS_AS(parse_bfile("1 2 3\n", "A003418"), std::runtime_error);      // trailing field
  CHECK_THROWS_AS(parse_bfile("1 twelve\n", "A003418"), std::runtime_error);   // bad integer
}

TEST_CASE("sequence support and oracles") {
  CHECK(is_supported_sequence("A003418"));
  CHECK(is_supported_sequence("A048671"));
  CHECK(!is_supported_sequence("A000001"));
  CHECK(oracle_value("A003418", 10) == 2520);
  CHECK(oracle_value("A048671", 12) == 12);
  CHECK_THROWS_AS(oracle_value("A000001", 1), std::invalid_argument);
}

TEST_CASE("bundled fixtures match the exact oracles term by term") {
  auto a = parse_bfile(fixture_text("A003418"), "A003418");
  REQUIRE(a.entries.size() == 200);
  CHECK(a.entries.front().index == 0);
  for (const auto& e : a.entries) {
    CHECK(e.value == numtheory::lcm_upto(e.index));
  }
  auto b = parse_bfile(fixture_text("A048671"), "A048671");
  REQUIRE(b.entries.size() == 200);
  CHECK(b.entries.front().index == 1);
  for (const auto& e : b.entries) {
    CHECK(e.value == numtheory::lcm_bar(e.index));
  }
  CHECK_THROWS_AS(fixture_text("A000001"), std::invalid_argument);
}

TEST_CASE("check_sequence flags mismatches and honors upto") {
  auto b = parse_bfile(fixture_text("A003418"), "A003418");
  auto ok = check_sequence(b, 199);
  CHECK(ok.checked == 200);
  CHECK(ok.mismatches.empty());

  auto limited = check_sequence(b, 50);
  CHECK(limited.checked == 51);  // indices 0..50

  auto corrupted = b;
  corrupted.entries[10].value += 1;
  auto bad = check_sequence(corrupted, 199);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].index == 10);
  CHECK(bad.mismatches[0].expected == 2520);
  CHECK(bad.mismatches[0].found == 2521);
}
