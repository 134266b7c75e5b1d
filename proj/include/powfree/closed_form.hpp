#pragma once

// Direct formulas for the 3/2-avoiding words and their auxiliary sequences.
// Every recurrence walks the base-6 (or base-12) digits iteratively, so the
// cost per term is logarithmic and there is no call-stack recursion.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powfree/word.hpp"

namespace powfree::closed {

/// Letter n of the least word with no factor of exponent >= 3/2. Period-10
/// template with free slots at residues 4 (3/4 by parity of n / 10) and 9
/// (the b sequence).
Letter w32_term(std::uint64_t n);

/// b(n) = w32_term(10n + 9) by the mod-6 recurrence, b(6n + 5) = b(n) + 2.
Letter b_rec(std::uint64_t n);

/// Base-6 digits of n, least significant first, with trailing 5s counted.
struct Base6Suffix {
  std::vector<std::uint8_t> digits;  // empty for n == 0
  std::size_t trailing_fives = 0;

  explicit Base6Suffix(std::uint64_t n);
  /// Digit k, reading as if padded with infinitely many leading zeros.
  std::uint8_t digit(std::size_t k) const { return k < digits.size() ? digits[k] : 0; }
  std::uint64_t value() const;
};

/// The four suffix families of the base-6 description of b. Family k yields
/// 2t + 3 + k, where t counts trailing 5s.
///   0: ...0 5^t, ...3 5^t
///   1: ...1 5^t, ...4 5^t
///   2: ...02 5^t, ...22 5^t, ...42 5^t
///   3: ...12 5^t, ...32 5^t, ...52 5^t
std::vector<int> b_families(std::uint64_t n);

/// b(n) from the base-6 suffix patterns. Throws std::logic_error if the
/// families do not match exactly once.
Letter b_closed(std::uint64_t n);

std::uint64_t c_term(std::uint64_t s);
std::uint64_t d_term(std::uint64_t s);
/// Closed forms, s >= 1.
std::uint64_t c_closed(std::uint64_t s);
std::uint64_t d_closed(std::uint64_t s);

/// f(n): letter n of the least word with no exact 3/2-power. Mod-12
/// template, recursing through f(12n + 11) = f(2n + 1) + 2 when n = 2 mod 3.
Letter f_term(std::uint64_t n);
inline Letter x32_term(std::uint64_t n) { return f_term(n); }

/// Decrementing b(n) to m (5 <= m < b(n)) closes a 3/2-power xyx in w32
/// with |x| = ell_m(...). Parity of b(n) and whether m == b(n) - 1 select
/// the case.
struct EllCase {
  Letter b_value;
  Letter m;

  bool b_odd() const { return b_value % 2 == 1; }
  bool m_is_predecessor() const { return m + 1 == b_value; }
};
std::uint64_t ell_m(const EllCase& c);

/// Which of the five ell_m formulas applies (0..4, in the order
/// odd/even, odd/odd, even/even, even/odd, even/predecessor).
int ell_case_index(const EllCase& c);

/// 2-adic valuation of n + 1; the least square-free word.
Letter ruler_term(std::uint64_t n);

std::uint64_t pow6(unsigned k);

}  // namespace powfree::closed
