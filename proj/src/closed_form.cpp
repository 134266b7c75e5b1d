#include "powfree/closed_form.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace powfree::closed {

Letter w32_term(std::uint64_t n) {
  const std::uint64_t block = n / 10;
  switch (n % 10) {
    case 0:
    case 3:
    case 6:
      return 0;
    case 1:
    case 5:
    case 8:
      return 1;
    case 2:
    case 7:
      return 2;
    case 4:
      return block % 2 == 0 ? 3 : 4;
    default:
      return b_rec(block);
  }
}

Letter b_rec(std::uint64_t n) {
  Letter carry = 0;
  for (;;) {
    const std::uint64_t r = n % 6;
    const std::uint64_t q = n / 6;
    switch (r) {
      case 0:
      case 3:
        return checked_add(carry, 3);
      case 1:
      case 4:
        return checked_add(carry, 4);
      case 2:
        return checked_add(carry, q % 2 == 0 ? 5 : 6);
      default:
        carry = checked_add(carry, 2);
        n = q;
    }
  }
}

Base6Suffix::Base6Suffix(std::uint64_t n) {
  while (n > 0) {
    digits.push_back(static_cast<std::uint8_t>(n % 6));
    n /= 6;
  }
  while (trailing_fives < digits.size() && digits[trailing_fives] == 5) ++trailing_fives;
}

std::uint64_t Base6Suffix::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * 6 + *it;
  return v;
}

namespace {

// Suffix patterns written most significant digit first, before the 5^t run.
struct Family {
  std::array<const char*, 3> patterns;
};

constexpr std::array<Family, 4> kFamilies{{
    {{"0", "3", nullptr}},
    {{"1", "4", nullptr}},
    {{"02", "22", "42"}},
    {{"12", "32", "52"}},
}};

bool suffix_matches(const Base6Suffix& s, const char* pattern) {
  const std::string p(pattern);
  const std::size_t t = s.trailing_fives;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::uint8_t want = static_cast<std::uint8_t>(p[p.size() - 1 - k] - '0');
    if (s.digit(t + k) != want) return false;
  }
  return true;
}

}  // namespace

std::vector<int> b_families(std::uint64_t n) {
  const Base6Suffix s(n);
  std::vector<int> hits;
  for (int f = 0; f < static_cast<int>(kFamilies.size()); ++f) {
    for (const char* p : kFamilies[f].patterns) {
      if (p != nullptr && suffix_matches(s, p)) {
        hits.push_back(f);
        break;
      }
    }
  }
  return hits;
}

Letter b_closed(std::uint64_t n) {
  const auto hits = b_families(n);
  if (hits.size() != 1) {
    throw std::logic_error("base-6 families of b do not partition n = " + std::to_string(n));
  }
  const Letter t = Base6Suffix(n).trailing_fives;
  return checked_add(checked_mul(2, t), 3 + static_cast<Letter>(hits.front()));
}

std::uint64_t pow6(unsigned k) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < k; ++i) v = checked_mul(v, 6);
  return v;
}

std::uint64_t c_term(std::uint64_t s) {
  if (s == 0) return 0;
  unsigned zeros = 0;
  while (s % 6 == 0) {
    s /= 6;
    ++zeros;
  }
  std::uint64_t v = (s % 6 == 2 || s % 6 == 4) ? 5 : 2;
  for (unsigned i = 0; i < zeros; ++i) v = checked_add(checked_mul(v, 6), 5);
  return v;
}

std::uint64_t d_term(std::uint64_t s) {
  if (s == 0) return 0;
  unsigned zeros = 0;
  while (s % 6 == 0) {
    s /= 6;
    ++zeros;
  }
  std::uint64_t v = (s % 6 == 1 || s % 6 == 5) ? 3 : 6;
  for (unsigned i = 0; i < zeros; ++i) v = checked_mul(v, 6);
  return v;
}

namespace {

std::pair<unsigned, unsigned> trailing_zeros_and_digit(std::uint64_t s) {
  if (s == 0) throw std::domain_error("closed form requires s >= 1");
  unsigned t = 0;
  while (s % 6 == 0) {
    s /= 6;
    ++t;
  }
  return {t, static_cast<unsigned>(s % 6)};
}

}  // namespace

std::uint64_t c_closed(std::uint64_t s) {
  const auto [t, last] = trailing_zeros_and_digit(s);
  if (last % 2 == 0) return pow6(t + 1) - 1;
  return checked_mul(3, pow6(t)) - 1;
}

std::uint64_t d_closed(std::uint64_t s) {
  const auto [t, last] = trailing_zeros_and_digit(s);
  if (last == 2 || last == 3 || last == 4) return pow6(t + 1);
  return checked_mul(3, pow6(t));
}

Letter f_term(std::uint64_t n) {
  Letter carry = 0;
  for (;;) {
    const std::uint64_t block = n / 12;
    switch (n % 12) {
      case 0:
      case 1:
      case 4:
      case 7:
      case 8:
        return carry;
      case 2:
      case 3:
      case 6:
      case 9:
      case 10:
        return checked_add(carry, 1);
      case 5:
        return checked_add(carry, block % 2 == 0 ? 2 : 3);
      default:
        if (block % 3 == 0) return checked_add(carry, 2);
        if (block % 3 == 1) return checked_add(carry, 3);
        carry = checked_add(carry, 2);
        n = 2 * block + 1;
    }
  }
}

std::uint64_t ell_m(const EllCase& c) {
  if (c.m < 5) throw std::domain_error("ell_m is defined for m >= 5");
  if (c.m >= c.b_value) throw std::domain_error("ell_m requires m < b(n)");
  const unsigned half_up = static_cast<unsigned>((c.m + 1) / 2);
  switch (ell_case_index(c)) {
    case 0:
    case 2:
      return checked_mul(30, pow6(static_cast<unsigned>(c.m / 2 - 3)));
    case 1:
    case 3:
      return checked_mul(60, pow6(half_up - 3));
    default:
      return checked_mul(30, pow6(half_up - 3));
  }
}

int ell_case_index(const EllCase& c) {
  const bool m_even = c.m % 2 == 0;
  if (c.b_odd()) return m_even ? 0 : 1;
  if (m_even) return 2;
  return c.m_is_predecessor() ? 4 : 3;
}

Letter ruler_term(std::uint64_t n) {
  if (n == UINT64_MAX) return 64;
  return static_cast<Letter>(std::countr_zero(n + 1));
}

}  // namespace powfree::closed
