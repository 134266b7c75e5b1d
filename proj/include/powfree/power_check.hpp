#pragma once

// Forbidden-factor detection for p/q-powers.
//
// Threshold mode forbids every factor whose exponent is at least p/q; a
// factor of period P reaches p/q once its length is ceil(P*p/q). Exact mode
// forbids only exact p/q-powers: length p*t with period q*t.
//
// All detectors look for a forbidden factor ending at one position. When the
// word before that position is already clean, that is the only place a new
// forbidden factor can appear, which is what makes greedy generation cheap.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "powfree/lce.hpp"
#include "powfree/parallel.hpp"
#include "powfree/word.hpp"

namespace powfree {

enum class Mode { Threshold, Exact };

std::string_view to_string(Mode mode);
/// Accepts "threshold" or "exact".
Mode parse_mode(std::string_view text);

/// Number of candidate periods for a suffix of a word of length n.
std::size_t candidate_count(std::size_t n, const Exponent& e, Mode mode);

/// The k-th candidate (k from 0) as (period, minimal forbidden length).
struct Candidate {
  std::size_t period;
  std::size_t length;
};
Candidate candidate_at(std::size_t k, const Exponent& e, Mode mode);

/// Forbidden factor ending at the last letter of w, by direct letter
/// comparison. Smallest period wins; in threshold mode the witness is then
/// extended to the longest factor with that period.
std::optional<Occurrence> forbidden_suffix(WordView w, const Exponent& e, Mode mode);

/// Same contract over the prefix w[0..end] of an indexed word.
std::optional<Occurrence> forbidden_suffix(const LceIndex& idx, const Exponent& e, Mode mode,
                                           std::size_t end, Exec exec = Exec::Serial);

/// First forbidden factor in end-position order, or nullopt when w is clean.
std::optional<Occurrence> contains_forbidden(WordView w, const Exponent& e, Mode mode,
                                             Exec exec = Exec::Parallel);
std::optional<Occurrence> contains_forbidden(const LceIndex& idx, const Exponent& e, Mode mode,
                                             Exec exec = Exec::Parallel);

/// Letters c for which idx.word() + c has a forbidden suffix, ascending and
/// without duplicates. Every candidate period P forbids at most the single
/// letter w[n - P], so one pass over the periods covers every c.
std::vector<Letter> banned_next_letters(const LceIndex& idx, const Exponent& e, Mode mode,
                                        Exec exec = Exec::Serial);

}  // namespace powfree
