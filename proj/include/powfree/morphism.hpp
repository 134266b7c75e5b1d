#pragma once

// Morphic description of the 3/2-avoiding words. The fixed point of phi
// starting with 3 interleaves 3, 4, 3, 4, ... with barred copies of b(0),
// b(1), ...; the codings tau and upsilon turn it into the threshold and
// exact words.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "powfree/word.hpp"

namespace powfree::morph {

struct BarLetter {
  Letter value = 0;
  bool barred = false;

  friend bool operator==(const BarLetter&, const BarLetter&) = default;
};

using BarWord = std::vector<BarLetter>;

inline BarLetter plain(Letter v) { return {v, false}; }
inline BarLetter bar(Letter v) { return {v, true}; }

/// phi(n) = 3 3' 4 4' 3 (n+2)',  phi(n') = 4 3' 3 4' 4 (n+2)'.
std::array<BarLetter, 6> phi_image(BarLetter c);
BarWord phi(const BarWord& w);

/// Streams phi^omega(3) letter by letter. Block j of the output is the image
/// of letter j, pulled from a nested copy of the same stream; nesting depth
/// grows as log_6 of the position, so memory stays logarithmic.
class PhiStream {
 public:
  PhiStream();
  ~PhiStream();
  PhiStream(PhiStream&&) noexcept;
  PhiStream& operator=(PhiStream&&) noexcept;

  BarLetter next();

 private:
  std::array<BarLetter, 6> block_;
  std::size_t pos_ = 0;
  std::unique_ptr<PhiStream> source_;
};

BarWord phi_fixed_prefix(std::size_t n);

/// tau(n) = 0 1 2 0 n, tau(n') = 1 0 2 1 n.
std::array<Letter, 5> tau_image(BarLetter c);
Word tau(const BarWord& w);

/// upsilon(n) = 0 0 1 1 0 (n-1), upsilon(n') = 1 0 0 1 1 (n-1). Throws
/// std::domain_error on letter value 0.
std::array<Letter, 6> upsilon_image(BarLetter c);
Word upsilon(const BarWord& w);

/// Calls sink with the first n letters of tau(phi^omega(3)) / upsilon(...),
/// without materialising the prefix.
void stream_w32(std::size_t n, const std::function<void(Letter)>& sink);
void stream_x32(std::size_t n, const std::function<void(Letter)>& sink);

Word w32_via_morphism(std::size_t n);
Word x32_via_morphism(std::size_t n);

}  // namespace powfree::morph
