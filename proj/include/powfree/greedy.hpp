#pragma once

// Lexicographically least avoiding words, built one letter at a time by
// taking the smallest letter that does not complete a forbidden suffix.

#include <cstddef>

#include "powfree/lce.hpp"
#include "powfree/parallel.hpp"
#include "powfree/power_check.hpp"
#include "powfree/word.hpp"

namespace powfree {

class GreedyState {
 public:
  GreedyState(Exponent e, Mode mode, Exec exec = Exec::Serial);

  /// Least letter that keeps the word clean. Never exceeds max letter + 1:
  /// a letter absent from the word cannot be the repeated end of a factor.
  Letter next_letter() const;

  /// Appends next_letter() and returns it.
  Letter extend();

  void reserve(std::size_t n) { index_.reserve(n); }

  const Word& word() const { return index_.word(); }
  std::size_t size() const { return index_.size(); }
  const Exponent& exponent() const { return exponent_; }
  Mode mode() const { return mode_; }

 private:
  Exponent exponent_;
  Mode mode_;
  Exec exec_;
  LceIndex index_;
  Letter max_seen_ = 0;
};

/// Length-n prefix of the greedy word.
Word generate(const Exponent& e, Mode mode, std::size_t n, Exec exec = Exec::Serial);

/// Reference generator: tries c = 0, 1, 2, ... and re-tests the whole suffix
/// by direct comparison each time. Quadratic per letter; kept for testing.
Word generate_reference(const Exponent& e, Mode mode, std::size_t n);

}  // namespace powfree
