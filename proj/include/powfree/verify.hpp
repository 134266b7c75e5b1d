#pragma once

// Executable checks of the structural claims about the 3/2-avoiding words.
// Each check scans a finite range and reports the first violation in
// position order. Scans are partitioned across threads under Exec::Parallel;
// Exec::Serial runs the same predicate in a plain loop.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "powfree/parallel.hpp"
#include "powfree/power_check.hpp"
#include "powfree/word.hpp"

namespace powfree::verify {

/// Named prefix generators.
enum class Source {
  W32Closed,
  W32Greedy,
  W32Morphism,
  X32Closed,
  X32Greedy,
  X32Morphism,
  Ruler,
  RulerGreedy,
  Zero,
};

/// "w32", "w32-greedy", "w32-morphism", "x32", "x32-greedy", "x32-morphism",
/// "ruler", "ruler-greedy", "zero". Throws std::invalid_argument otherwise.
Source parse_source(std::string_view id);
std::string_view to_string(Source s);
Word make_prefix(Source s, std::size_t n);

/// The exponent and mode a source is meant to avoid.
struct Target {
  Exponent exponent;
  Mode mode;
};
Target default_target(Source s);

struct Violation {
  std::string kind;
  std::uint64_t position = 0;
  std::optional<Occurrence> occurrence;
  std::vector<std::uint64_t> values;  // check-specific, see each check
};

struct CheckReport {
  std::string name;
  std::map<std::string, std::uint64_t> params;    // the range tested
  std::map<std::string, std::uint64_t> counters;  // what was exercised
  bool passed = true;
  std::optional<Violation> violation;
  double elapsed_ms = 0.0;
};

inline constexpr std::string_view kReportFormat = "powfree-report/1";

std::string to_text(const CheckReport& r, bool with_timing = false);
/// Machine format; never includes timing so output is reproducible.
nlohmann::json to_json(const CheckReport& r);

// --- power-freeness and greedy minimality -------------------------------

CheckReport check_powerfree(Source s, const Exponent& e, Mode mode, std::size_t n,
                            Exec exec = Exec::Parallel);
CheckReport check_powerfree(std::string name, WordView w, const Exponent& e, Mode mode,
                            Exec exec = Exec::Parallel);

/// At every position i: w[0..i] is clean, and each m < w[i] put at i
/// creates a forbidden suffix. Violation values: {m, w[i]}.
CheckReport check_minimality(Source s, const Exponent& e, Mode mode, std::size_t n,
                             Exec exec = Exec::Parallel);
CheckReport check_minimality(std::string name, WordView w, const Exponent& e, Mode mode,
                             Exec exec = Exec::Parallel);

/// Greedy, closed form and morphism agree on [0, n) for both the threshold
/// and exact words. Violation values: {greedy, closed, morphism}.
CheckReport check_cross(std::size_t n);

// --- closed-form identities ----------------------------------------------

/// b_rec == b_closed and exactly one suffix family matches, for n < n_max.
CheckReport check_b_closed(std::uint64_t n_max, Exec exec = Exec::Parallel);
/// c/d recurrences equal the closed forms and c <= d <= 3s, 1 <= s < s_max.
CheckReport check_cd_closed(std::uint64_t s_max, Exec exec = Exec::Parallel);
/// f(12n + 11) + 1 == b(n) for n < n_max.
CheckReport check_f_b_link(std::uint64_t n_max, Exec exec = Exec::Parallel);
/// w32_term follows its period-10 template and w32_term(10n + 9) == b(n).
CheckReport check_w32_template(std::uint64_t n_max, Exec exec = Exec::Parallel);
/// Ruler sequence is square-free and equals greedy 2/1 on [0, n).
CheckReport check_ruler(std::size_t n, Exec exec = Exec::Parallel);

/// b(d(s) j + c(s)) != b(d(s) j + c(s) + 6s), 1 <= s <= s_max, 0 <= j <= j_max.
CheckReport check_b_inequality(std::uint64_t s_max, std::uint64_t j_max,
                               Exec exec = Exec::Parallel);
/// For 0 <= n <= n_max, 1 <= r <= r_max some 0 <= j < r has
/// b(n + j) != b(n + 2r + j).
CheckReport check_b_window(std::uint64_t n_max, std::uint64_t r_max, Exec exec = Exec::Parallel);

// --- decrement witnesses ---------------------------------------------------

/// For n <= n_max, n = 2 mod 3, 5 <= m < b(n): putting m at 10n + 9 makes
/// the 3 ell_m letters ending there an xyx with |x| = |y| = ell_m. Pairs
/// whose window would start before 0 are skipped and counted.
CheckReport check_ell_claim(std::uint64_t n_max, Exec exec = Exec::Parallel);
/// The b-interval form of the same claim, plus b(n - ell_m/5) == m.
CheckReport check_eq6_intervals(std::uint64_t n_max, Exec exec = Exec::Parallel);
/// For n <= n_max, n = 2 mod 3, 4 <= m < f(12n + 11): putting m at 12n + 11
/// makes the (18/5) ell_{m+1} letters ending there an exact 3/2-power.
CheckReport check_x_decrement_lengths(std::uint64_t n_max, Exec exec = Exec::Parallel);

// --- square and overlap structure -----------------------------------------

/// Every square xx has |x| = 1 and x in {0, 1}.
CheckReport check_x_squares(std::string name, WordView w, Exec exec = Exec::Parallel);
CheckReport check_x_squares(std::size_t n, Exec exec = Exec::Parallel);
/// No factor a x a x a.
CheckReport check_x_overlapfree(std::string name, WordView w, Exec exec = Exec::Parallel);
CheckReport check_x_overlapfree(std::size_t n, Exec exec = Exec::Parallel);

}  // namespace powfree::verify
