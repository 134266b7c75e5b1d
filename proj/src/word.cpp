#include "powfree/word.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace powfree {

Letter checked_add(Letter a, Letter b) {
  Letter out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("letter arithmetic overflow");
  }
  return out;
}

Letter checked_mul(Letter a, Letter b) {
  Letter out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("letter arithmetic overflow");
  }
  return out;
}

Exponent::Exponent(std::uint64_t p, std::uint64_t q) {
  if (q == 0 || p == 0) {
    throw std::domain_error("exponent terms must be positive");
  }
  const std::uint64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  if (p_ <= q_) {
    throw std::domain_error("exponent must exceed 1");
  }
}

namespace {

std::uint64_t parse_positive(std::string_view text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not a positive integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Exponent Exponent::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("exponent must be written P/Q: '" + std::string(text) + "'");
  }
  const auto p = parse_positive(text.substr(0, slash));
  const auto q = parse_positive(text.substr(slash + 1));
  try {
    return Exponent(p, q);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

bool Exponent::reached_by(std::uint64_t length, std::uint64_t period) const {
  using Wide = unsigned __int128;
  return static_cast<Wide>(length) * q_ >= static_cast<Wide>(period) * p_;
}

bool Exponent::equals_ratio(std::uint64_t length, std::uint64_t period) const {
  using Wide = unsigned __int128;
  return static_cast<Wide>(length) * q_ == static_cast<Wide>(period) * p_;
}

std::uint64_t Exponent::min_length_for_period(std::uint64_t period) const {
  using Wide = unsigned __int128;
  const Wide num = static_cast<Wide>(period) * p_ + (q_ - 1);
  const Wide len = num / q_;
  if (len > static_cast<Wide>(UINT64_MAX)) {
    throw std::overflow_error("period too large for exponent");
  }
  return static_cast<std::uint64_t>(len);
}

std::string Exponent::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

bool has_period(WordView w, std::size_t period) {
  if (period == 0 || period > w.size()) {
    throw std::domain_error("period must lie in [1, |w|]");
  }
  for (std::size_t i = 0; i + period < w.size(); ++i) {
    if (w[i] != w[i + period]) return false;
  }
  return true;
}

std::pair<std::size_t, std::size_t> max_exponent(WordView w) {
  if (w.empty()) throw std::domain_error("exponent of the empty word");
  for (std::size_t period = 1; period < w.size(); ++period) {
    if (has_period(w, period)) return {w.size(), period};
  }
  return {w.size(), w.size()};
}

bool is_exact_power(WordView w, const Exponent& e) {
  if (w.empty()) throw std::domain_error("exact power test on the empty word");
  if (w.size() % e.p() != 0) return false;
  const std::size_t t = w.size() / e.p();
  return has_period(w, e.q() * t);
}

bool is_valid_occurrence(WordView w, const Occurrence& occ) {
  if (occ.length == 0 || occ.period == 0 || occ.period >= occ.length) return false;
  if (occ.start > w.size() || occ.length > w.size() - occ.start) return false;
  return has_period(w.subspan(occ.start, occ.length), occ.period);
}

}  // namespace powfree
