#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "powfree/closed_form.hpp"
#include "tables.hpp"

using namespace powfree;
using namespace powfree::closed;

TEST_CASE("w32_term") {
  CHECK(w32_term(0) == 0);
  CHECK(w32_term(4) == 3);
  CHECK(w32_term(9) == 3);
  CHECK(w32_term(14) == 4);
  CHECK(w32_term(29) == 5);
  CHECK(w32_term(89) == 6);
  for (std::size_t i = 0; i < tables::kW32First100.size(); ++i) {
    REQUIRE(w32_term(i) == tables::kW32First100[i]);
  }
}

TEST_CASE("w32_term equals the literal self-recursive definition") {
  for (std::uint64_t n = 0; n < 200000; ++n) REQUIRE(w32_term(n) == oracle::a_literal(n));
}

TEST_CASE("b_rec") {
  CHECK(b_rec(0) == 3);
  CHECK(b_rec(2) == 5);
  CHECK(b_rec(5) == oracle::b_literal(0) + 2);
  CHECK(b_rec(5) == 5);
  CHECK(b_rec(8) == 6);
  CHECK(b_rec(8) == tables::kW32First100[89]);
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(b_rec(n) == oracle::b_literal(n));
}

TEST_CASE("b_closed") {
  CHECK(b_rec(35) == 7);
  CHECK(b_closed(35) == 7);
  CHECK(b_closed(8) == 6);
  CHECK(b_closed(1) == 4);
  CHECK(b_closed(2) == 5);
  CHECK(b_closed(5) == 5);
  CHECK(b_closed(0) == 3);
  // 6^k - 1 is all fives: t = k, padding gives family 0.
  CHECK(b_closed(pow6(10) - 1) == 2 * 10 + 3);
}

TEST_CASE("base-6 suffix reading pads with zeros") {
  const Base6Suffix s(5);
  CHECK(s.trailing_fives == 1);
  CHECK(s.digit(1) == 0);
  CHECK(s.digit(40) == 0);
  CHECK(Base6Suffix(0).digits.empty());
  for (std::uint64_t n : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{35}, std::uint64_t{1234567}, UINT64_MAX}) CHECK(Base6Suffix(n).value() == n);
}

TEST_CASE("suffix families partition the naturals") {
  for (std::uint64_t n = 0; n < 200000; ++n) REQUIRE(b_families(n).size() == 1);
  CHECK(b_families(2) == std::vector<int>{2});
  CHECK(b_families(8) == std::vector<int>{3});
}

TEST_CASE("c and d recurrences") {
  CHECK(c_term(0) == 0);
  CHECK(d_term(0) == 0);
  CHECK(c_term(1) == 2);
  CHECK(d_term(1) == 3);
  CHECK(c_term(6) == 6 * c_term(1) + 5);
  CHECK(c_term(6) == 17);
  CHECK(d_term(12) == 6 * d_term(2));
  CHECK(d_term(12) == 36);
  for (std::uint64_t s = 0; s < 50000; ++s) {
    REQUIRE(c_term(s) == oracle::c_literal(s));
    REQUIRE(d_term(s) == oracle::d_literal(s));
  }
}

TEST_CASE("c and d closed forms") {
  CHECK(c_closed(1) == 2);
  CHECK(d_closed(1) == 3);
  CHECK(c_closed(6) == 17);
  CHECK(d_closed(6) == 18);
  CHECK(d_closed(12) == 36);
  CHECK_THROWS_AS(c_closed(0), std::domain_error);
  CHECK_THROWS_AS(d_closed(0), std::domain_error);
  for (std::uint64_t s = 1; s < 50000; ++s) {
    REQUIRE(c_closed(s) == c_term(s));
    REQUIRE(d_closed(s) == d_term(s));
    REQUIRE(c_term(s) <= d_term(s));
    REQUIRE(d_term(s) <= 3 * s);
  }
}

TEST_CASE("f_term") {
  CHECK(f_term(5) == 2);
  CHECK(f_term(11) == 2);
  CHECK(f_term(35) == 4);
  CHECK(f_term(107) == 5);
  // Residue 3 mod 12 is always 1 (the mod-12 reading of the definition).
  for (std::uint64_t n = 3; n < 10000; n += 12) REQUIRE(f_term(n) == 1);
  for (std::size_t i = 0; i < tables::kX32First144.size(); ++i) {
    REQUIRE(x32_term(i) == tables::kX32First144[i]);
  }
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(f_term(12 * n + 11) + 1 == b_rec(n));
}

TEST_CASE("ell_m") {
  CHECK(ell_m({7, 6}) == 30);
  CHECK(ell_m({7, 5}) == 60);
  CHECK(ell_m({6, 5}) == 30);
  CHECK(ell_m({8, 6}) == 30);
  CHECK(ell_m({8, 5}) == 60);
  CHECK(ell_m({9, 7}) == 360);
  CHECK(ell_m({8, 7}) == 180);
  CHECK(ell_m({10, 8}) == 180);
  CHECK(ell_case_index({7, 6}) == 0);
  CHECK(ell_case_index({7, 5}) == 1);
  CHECK(ell_case_index({8, 6}) == 2);
  CHECK(ell_case_index({8, 5}) == 3);
  CHECK(ell_case_index({6, 5}) == 4);
  CHECK_THROWS_AS(ell_m({7, 4}), std::domain_error);
  CHECK_THROWS_AS(ell_m({6, 6}), std::domain_error);
  CHECK_THROWS_AS(ell_m({6, 9}), std::domain_error);
  for (Letter b = 6; b < 30; ++b) {
    for (Letter m = 5; m < b; ++m) REQUIRE(ell_m({b, m}) % 10 == 0);
  }
}

TEST_CASE("ruler_term") {
  CHECK(ruler_term(0) == 0);
  CHECK(ruler_term(7) == 3);
  CHECK(ruler_term(15) == 4);
  for (std::uint64_t n = 0; n < 5000; ++n) {
    std::uint64_t m = n + 1;
    Letter v = 0;
    while (m % 2 == 0) {
      m /= 2;
      ++v;
    }
    REQUIRE(ruler_term(n) == v);
  }
}

TEST_CASE("large indices stay logarithmic and never wrap") {
  const std::uint64_t n = UINT64_MAX / 10 - 7;
  CHECK(b_rec(n) == b_closed(n));
  CHECK(b_rec(n) < 60);
  CHECK(f_term(UINT64_MAX - 3) < 60);
  CHECK(w32_term(UINT64_MAX) < 60);
}
