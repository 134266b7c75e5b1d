#pragma once

// Test-only oracles. Each one restates a definition as directly as possible
// and shares no code with the library path it is used to check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Letters = std::vector<std::uint64_t>;

/// Does w[i, i + len) have period P, by letter-by-letter comparison.
inline bool factor_has_period(const Letters& w, std::size_t i, std::size_t len, std::size_t P) {
  for (std::size_t k = i; k + P < i + len; ++k) {
    if (w[k] != w[k + P]) return false;
  }
  return true;
}

/// Every factor, every period: is there a factor of length len and period P
/// (1 <= P < len) with len*q >= P*p (threshold) or len*q == P*p (exact)?
inline bool has_forbidden(const Letters& w, std::uint64_t p, std::uint64_t q, bool exact) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 2; i + len <= w.size(); ++len) {
      for (std::size_t P = 1; P < len; ++P) {
        const bool hits = exact ? len * q == P * p : len * q >= P * p;
        if (hits && factor_has_period(w, i, len, P)) return true;
      }
    }
  }
  return false;
}

/// Forbidden factor ending at the last letter, same enumeration.
inline bool has_forbidden_suffix(const Letters& w, std::uint64_t p, std::uint64_t q, bool exact) {
  const std::size_t n = w.size();
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t P = 1; P < len; ++P) {
      const bool hits = exact ? len * q == P * p : len * q >= P * p;
      if (hits && factor_has_period(w, n - len, len, P)) return true;
    }
  }
  return false;
}

/// Contains x y x with |x| >= 1 and |y| - |x| in `deltas` (e.g. {0, -1}).
inline bool has_xyx(const Letters& w, const std::vector<int>& deltas) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 1; i + 2 * x <= n; ++x) {
      for (int d : deltas) {
        const long long y = static_cast<long long>(x) + d;
        if (y < 0) continue;
        const std::size_t total = 2 * x + static_cast<std::size_t>(y);
        if (i + total > n) continue;
        bool same = true;
        for (std::size_t k = 0; k < x && same; ++k) same = w[i + k] == w[i + x + y + k];
        if (same) return true;
      }
    }
  }
  return false;
}

inline std::size_t lce_backward(const Letters& w, std::size_t i, std::size_t j) {
  std::size_t L = 0;
  while (L <= i && L <= j && w[i - L] == w[j - L]) ++L;
  return L;
}

/// Literal self-recursive a(n), including a(10n+9) = a(5(n-2)/3 + 4) + 2.
inline std::uint64_t a_literal(std::uint64_t n) {
  const std::uint64_t k = n / 10;
  switch (n % 10) {
    case 0: case 3: case 6: return 0;
    case 1: case 5: case 8: return 1;
    case 2: case 7: return 2;
    case 4: return k % 2 == 0 ? 3 : 4;
    default:
      if (k % 3 == 0) return 3;
      if (k % 3 == 1) return 4;
      return a_literal(5 * (k - 2) / 3 + 4) + 2;
  }
}

/// Literal recursive b(n).
inline std::uint64_t b_literal(std::uint64_t n) {
  const std::uint64_t k = n / 6;
  switch (n % 6) {
    case 0: case 3: return 3;
    case 1: case 4: return 4;
    case 2: return k % 2 == 0 ? 5 : 6;
    default: return b_literal(k) + 2;
  }
}

inline std::uint64_t c_literal(std::uint64_t s) {
  if (s == 0) return 0;
  switch (s % 6) {
    case 1: case 3: case 5: return 2;
    case 2: case 4: return 5;
    default: return 6 * c_literal(s / 6) + 5;
  }
}

inline std::uint64_t d_literal(std::uint64_t s) {
  if (s == 0) return 0;
  switch (s % 6) {
    case 1: case 5: return 3;
    case 2: case 3: case 4: return 6;
    default: return 6 * d_literal(s / 6);
  }
}

/// All words of length `len` over {0, .., k-1}, in lexicographic order.
inline void for_each_word(std::size_t len, std::uint64_t k, const std::function<void(const Letters&)>& f) {
  Letters w(len, 0);
  for (;;) {
    f(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == k - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace oracle
