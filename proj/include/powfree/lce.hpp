#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powfree/word.hpp"

namespace powfree {

/// Append-only word with polynomial fingerprints of every prefix, answering
/// block-equality and backward longest-common-extension queries.
///
/// Fingerprints are taken modulo the Mersenne prime 2^61 - 1. A fingerprint
/// mismatch proves the blocks differ; a match is always confirmed by direct
/// comparison, so a collision can never change an answer.
class LceIndex {
 public:
  LceIndex();
  explicit LceIndex(WordView w);

  void push_back(Letter c);
  void pop_back();
  void reserve(std::size_t n);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const Word& word() const { return letters_; }
  WordView view() const { return letters_; }

  /// w[a, a + len) == w[b, b + len).
  bool blocks_equal(std::size_t a, std::size_t b, std::size_t len) const;

  /// Largest L with w[i-L+1..i] == w[j-L+1..j]; 0 when w[i] != w[j].
  std::size_t lce_backward(std::size_t i, std::size_t j) const;

 private:
  std::uint64_t fingerprint(std::size_t begin, std::size_t len) const;
  bool direct_equal(std::size_t a, std::size_t b, std::size_t len) const;

  Word letters_;
  std::vector<std::uint64_t> prefix_;  // prefix_[i] fingerprints w[0, i)
  std::vector<std::uint64_t> powers_;  // powers_[i] = base^i
};

}  // namespace powfree
