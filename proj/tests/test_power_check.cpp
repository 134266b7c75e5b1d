#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracle.hpp"
#include "powfree/lce.hpp"
#include "powfree/power_check.hpp"
#include "tables.hpp"

using namespace powfree;

namespace {

const Exponent kThreeHalves(3, 2);

Word first(const std::vector<std::uint64_t>& table, std::size_t n) {
  return Word(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

TEST_CASE("forbidden_suffix examples") {
  CHECK_FALSE(forbidden_suffix(Word{0, 1, 2, 0, 3, 1, 0}, kThreeHalves, Mode::Threshold));

  // Decrementing the 3 at index 4 to 1 gives the 5/3-power 01201.
  auto occ = forbidden_suffix(Word{0, 1, 2, 0, 1}, kThreeHalves, Mode::Threshold);
  REQUIRE(occ);
  CHECK(*occ == Occurrence{0, 3, 5});

  // A bare square of odd period is not an exact 3/2-power.
  CHECK_FALSE(forbidden_suffix(Word{0, 0}, kThreeHalves, Mode::Exact));

  occ = forbidden_suffix(Word{1, 0, 2, 1, 0}, kThreeHalves, Mode::Threshold);
  REQUIRE(occ);
  CHECK(*occ == Occurrence{0, 3, 5});

  CHECK_FALSE(forbidden_suffix(Word{}, kThreeHalves, Mode::Threshold));
}

TEST_CASE("threshold witness prefers the smallest period, then the longest factor") {
  // Suffix 0 1 0 1 0 has period 2; the whole word 1 0 1 0 1 0 does too.
  const Word w{1, 0, 1, 0, 1, 0};
  const auto occ = forbidden_suffix(w, kThreeHalves, Mode::Threshold);
  REQUIRE(occ);
  CHECK(*occ == Occurrence{0, 2, 6});
  const LceIndex idx(w);
  CHECK(forbidden_suffix(idx, kThreeHalves, Mode::Threshold, w.size() - 1) == occ);
}

TEST_CASE("contains_forbidden examples") {
  CHECK_FALSE(contains_forbidden(tables::kW32First100, kThreeHalves, Mode::Threshold));
  CHECK_FALSE(contains_forbidden(tables::kX32First144, kThreeHalves, Mode::Exact));

  const auto occ = contains_forbidden(Word{0, 1, 0, 1, 0}, kThreeHalves, Mode::Threshold);
  REQUIRE(occ);
  CHECK(occ->period == 2);
  CHECK(occ->length >= 3);
  CHECK(is_valid_occurrence(Word{0, 1, 0, 1, 0}, *occ));

  // x32 has squares, so the threshold detector rejects it.
  CHECK(contains_forbidden(tables::kX32First144, kThreeHalves, Mode::Threshold));
}

TEST_CASE("lce_backward") {
  const LceIndex a(Word{0, 1, 0, 1});
  CHECK(a.lce_backward(3, 1) == 2);
  const LceIndex b(Word{0, 1, 2});
  CHECK(b.lce_backward(2, 1) == 0);

  // w[19] = 4 and w[9] = 3, so nothing matches; one step back the rows
  // agree on 1 2 0 1 until 4 vs 3 at indices 14 and 4.
  const LceIndex w(first(tables::kW32First100, 20));
  CHECK(w.lce_backward(19, 9) == oracle::lce_backward(w.word(), 19, 9));
  CHECK(w.lce_backward(19, 9) == 0);
  CHECK(w.lce_backward(18, 8) == 4);
  CHECK(w.lce_backward(5, 5) == 6);
  CHECK_THROWS_AS(w.lce_backward(20, 3), std::out_of_range);
}

TEST_CASE("LceIndex push and pop keep fingerprints consistent") {
  std::mt19937_64 rng(11);
  LceIndex idx;
  Word shadow;
  for (int step = 0; step < 3000; ++step) {
    if (!shadow.empty() && rng() % 4 == 0) {
      idx.pop_back();
      shadow.pop_back();
    } else {
      const Letter c = rng() % 3;
      idx.push_back(c);
      shadow.push_back(c);
    }
    if (shadow.size() >= 2) {
      const std::size_t i = rng() % shadow.size();
      const std::size_t j = rng() % shadow.size();
      REQUIRE(idx.lce_backward(i, j) == oracle::lce_backward(shadow, i, j));
    }
  }
  CHECK_THROWS_AS(LceIndex().pop_back(), std::logic_error);
}

TEST_CASE("indexed forbidden_suffix equals direct comparison on random words") {
  std::mt19937_64 rng(2024);
  const Exponent exps[] = {Exponent(3, 2), Exponent(2, 1), Exponent(5, 3), Exponent(7, 4)};
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = 1 + rng() % 40;
    const Letter alphabet = 2 + rng() % 3;
    Word w(len);
    for (auto& c : w) c = rng() % alphabet;
    // Bias toward repetitive words so hits are common.
    if (trial % 2 == 0 && len > 4) {
      const std::size_t P = 1 + rng() % (len / 2);
      for (std::size_t i = P; i < len; ++i) w[i] = w[i - P];
      w.back() = rng() % alphabet;
    }
    const Exponent& e = exps[trial % 4];
    const Mode mode = trial % 3 == 0 ? Mode::Exact : Mode::Threshold;
    const LceIndex idx(w);
    const auto direct = forbidden_suffix(w, e, mode);
    REQUIRE(forbidden_suffix(idx, e, mode, len - 1, Exec::Serial) == direct);
    REQUIRE(forbidden_suffix(idx, e, mode, len - 1, Exec::Parallel) == direct);
  }
}

TEST_CASE("detectors agree with the all-factors oracle on {0,1,2}^<=8") {
  for (std::size_t len = 1; len <= 8; ++len) {
    oracle::for_each_word(len, 3, [&](const oracle::Letters& w) {
      for (bool exact : {false, true}) {
        const Mode mode = exact ? Mode::Exact : Mode::Threshold;
        REQUIRE(contains_forbidden(w, kThreeHalves, mode, Exec::Serial).has_value() ==
                oracle::has_forbidden(w, 3, 2, exact));
        REQUIRE(forbidden_suffix(w, kThreeHalves, mode).has_value() ==
                oracle::has_forbidden_suffix(w, 3, 2, exact));
      }
    });
  }
}

TEST_CASE("3/2 witnesses are exactly xyx factors") {
  // Threshold: |y| = |x| or |y| = |x| - 1. Exact: |y| = |x|.
  for (std::size_t len = 1; len <= 10; ++len) {
    oracle::for_each_word(len, 3, [&](const oracle::Letters& w) {
      REQUIRE(contains_forbidden(w, kThreeHalves, Mode::Threshold, Exec::Serial).has_value() ==
              oracle::has_xyx(w, {0, -1}));
      REQUIRE(contains_forbidden(w, kThreeHalves, Mode::Exact, Exec::Serial).has_value() ==
              oracle::has_xyx(w, {0}));
    });
  }
}

TEST_CASE("witnesses are valid occurrences ending where reported") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w(2 + rng() % 30);
    for (auto& c : w) c = rng() % 3;
    for (Mode mode : {Mode::Threshold, Mode::Exact}) {
      if (auto occ = contains_forbidden(w, kThreeHalves, mode)) {
        REQUIRE(is_valid_occurrence(w, *occ));
        if (mode == Mode::Exact) {
          REQUIRE(occ->length * 2 == occ->period * 3);
        } else {
          REQUIRE(kThreeHalves.reached_by(occ->length, occ->period));
        }
        // No earlier end position is dirty.
        const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(occ->end() - 1));
        REQUIRE_FALSE(contains_forbidden(head, kThreeHalves, mode, Exec::Serial));
      }
    }
  }
}

TEST_CASE("a forbidden suffix stays forbidden in every extension") {
  std::mt19937_64 rng(9);
  int seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Word w(2 + rng() % 14);
    for (auto& c : w) c = rng() % 3;
    for (Mode mode : {Mode::Threshold, Mode::Exact}) {
      if (!forbidden_suffix(w, kThreeHalves, mode)) continue;
      ++seen;
      Word ext = w;
      for (int k = 0; k < 4; ++k) {
        ext.push_back(rng() % 4);
        REQUIRE(contains_forbidden(ext, kThreeHalves, mode));
      }
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("banned_next_letters matches trying every letter") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    Word w(rng() % 25);
    for (auto& c : w) c = rng() % 4;
    const Mode mode = trial % 2 ? Mode::Exact : Mode::Threshold;
    const LceIndex idx(w);
    std::vector<Letter> expected;
    for (Letter c = 0; c < 5; ++c) {
      Word ext = w;
      ext.push_back(c);
      if (forbidden_suffix(ext, kThreeHalves, mode)) expected.push_back(c);
    }
    REQUIRE(banned_next_letters(idx, kThreeHalves, mode, Exec::Serial) == expected);
    REQUIRE(banned_next_letters(idx, kThreeHalves, mode, Exec::Parallel) == expected);
  }
}

TEST_CASE("serial and parallel contains_forbidden agree") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Word w(1 + rng() % 200);
    for (auto& c : w) c = rng() % (3 + trial % 5);
    for (Mode mode : {Mode::Threshold, Mode::Exact}) {
      REQUIRE(contains_forbidden(w, kThreeHalves, mode, Exec::Serial) ==
              contains_forbidden(w, kThreeHalves, mode, Exec::Parallel));
    }
  }
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("threshold") == Mode::Threshold);
  CHECK(parse_mode("exact") == Mode::Exact);
  CHECK_THROWS_AS(parse_mode("Exact"), std::invalid_argument);
}
