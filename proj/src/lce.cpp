#include "powfree/lce.hpp"

#include <algorithm>
#include <stdexcept>

namespace powfree {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
// Fixed so that every run is reproducible; correctness does not depend on it.
constexpr std::uint64_t kBase = 0x1f3a5c7e9b2d4f61ULL % kMod;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t letter_code(Letter c) {
  // Shift by one so that letter 0 still contributes.
  return (c % kMod) + 1;
}

}  // namespace

LceIndex::LceIndex() : prefix_{0}, powers_{1} {}

LceIndex::LceIndex(WordView w) : LceIndex() {
  reserve(w.size());
  for (Letter c : w) push_back(c);
}

void LceIndex::reserve(std::size_t n) {
  letters_.reserve(n);
  prefix_.reserve(n + 1);
  powers_.reserve(n + 1);
}

void LceIndex::push_back(Letter c) {
  letters_.push_back(c);
  prefix_.push_back(add_mod(mul_mod(prefix_.back(), kBase), letter_code(c)));
  if (powers_.size() < prefix_.size()) {
    powers_.push_back(mul_mod(powers_.back(), kBase));
  }
}

void LceIndex::pop_back() {
  if (letters_.empty()) throw std::logic_error("pop_back on empty LceIndex");
  letters_.pop_back();
  prefix_.pop_back();
}

std::uint64_t LceIndex::fingerprint(std::size_t begin, std::size_t len) const {
  const std::uint64_t whole = prefix_[begin + len];
  const std::uint64_t head = mul_mod(prefix_[begin], powers_[len]);
  return add_mod(whole, kMod - head);
}

bool LceIndex::direct_equal(std::size_t a, std::size_t b, std::size_t len) const {
  return std::equal(letters_.begin() + a, letters_.begin() + a + len, letters_.begin() + b);
}

bool LceIndex::blocks_equal(std::size_t a, std::size_t b, std::size_t len) const {
  if (a + len > size() || b + len > size()) {
    throw std::out_of_range("block outside indexed word");
  }
  if (len == 0 || a == b) return true;
  if (fingerprint(a, len) != fingerprint(b, len)) return false;
  return direct_equal(a, b, len);
}

std::size_t LceIndex::lce_backward(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("lce index outside word");
  if (i == j) return i + 1;
  const std::size_t limit = std::min(i, j) + 1;
  // Binary search on fingerprints for the longest matching suffix length.
  std::size_t lo = 0;
  std::size_t hi = limit;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (fingerprint(i + 1 - mid, mid) == fingerprint(j + 1 - mid, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  // Confirm the candidate: lo letters equal and the next pair (if any) differs.
  const bool body_ok = direct_equal(i + 1 - lo, j + 1 - lo, lo);
  const bool stop_ok = lo == limit || letters_[i - lo] != letters_[j - lo];
  if (body_ok && stop_ok) return lo;

  std::size_t len = 0;
  while (len < limit && letters_[i - len] == letters_[j - len]) ++len;
  return len;
}

}  // namespace powfree
