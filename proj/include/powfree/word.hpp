#pragma once

// Words over the natural numbers, exact exponents, and period primitives.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powfree {

using Letter = std::uint64_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

// Overflow is a hard error, never wraparound.
Letter checked_add(Letter a, Letter b);
Letter checked_mul(Letter a, Letter b);

/// Reduced rational p/q with p > q >= 1.
class Exponent {
 public:
  Exponent(std::uint64_t p, std::uint64_t q);

  /// Parses "P/Q" (two positive decimal integers). Decimal forms like "1.5"
  /// are rejected.
  static Exponent parse(std::string_view text);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }

  /// length/period >= p/q, by cross-multiplication.
  bool reached_by(std::uint64_t length, std::uint64_t period) const;
  /// length/period == p/q.
  bool equals_ratio(std::uint64_t length, std::uint64_t period) const;

  /// Shortest length at which a factor of the given period reaches p/q,
  /// i.e. ceil(period * p / q).
  std::uint64_t min_length_for_period(std::uint64_t period) const;

  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

/// Witness of a forbidden factor: w[start, start + length) has period `period`.
struct Occurrence {
  std::size_t start = 0;
  std::size_t period = 0;
  std::size_t length = 0;

  std::size_t end() const { return start + length; }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// True iff w[i] == w[i + period] for every valid i. A word always has
/// period equal to its own length.
bool has_period(WordView w, std::size_t period);

/// Returns (length, least period). The exponent is length / least period.
std::pair<std::size_t, std::size_t> max_exponent(WordView w);

/// True iff |w| = p*t and w has period q*t for some t >= 1.
bool is_exact_power(WordView w, const Exponent& e);

/// Checks that `occ` lies inside `w` and the designated factor has the
/// stated period.
bool is_valid_occurrence(WordView w, const Occurrence& occ);

}  // namespace powfree
