#include "powfree/morphism.hpp"

#include <stdexcept>

namespace powfree::morph {

std::array<BarLetter, 6> phi_image(BarLetter c) {
  const BarLetter last = bar(checked_add(c.value, 2));
  if (!c.barred) return {plain(3), bar(3), plain(4), bar(4), plain(3), last};
  return {plain(4), bar(3), plain(3), bar(4), plain(4), last};
}

BarWord phi(const BarWord& w) {
  BarWord out;
  out.reserve(w.size() * 6);
  for (BarLetter c : w) {
    const auto img = phi_image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

// phi(3) begins with 3, so block 0 is phi(3) itself; blocks 1, 2, ... are the
// images of letters 1, 2, ... of the stream, read from a nested stream that
// has skipped its own letter 0.
PhiStream::PhiStream() : block_(phi_image(plain(3))) {}
PhiStream::~PhiStream() = default;
PhiStream::PhiStream(PhiStream&&) noexcept = default;
PhiStream& PhiStream::operator=(PhiStream&&) noexcept = default;

BarLetter PhiStream::next() {
  if (pos_ == block_.size()) {
    if (!source_) {
      source_ = std::make_unique<PhiStream>();
      source_->next();
    }
    block_ = phi_image(source_->next());
    pos_ = 0;
  }
  return block_[pos_++];
}

BarWord phi_fixed_prefix(std::size_t n) {
  BarWord out;
  out.reserve(n);
  PhiStream stream;
  while (out.size() < n) out.push_back(stream.next());
  return out;
}

std::array<Letter, 5> tau_image(BarLetter c) {
  if (!c.barred) return {0, 1, 2, 0, c.value};
  return {1, 0, 2, 1, c.value};
}

std::array<Letter, 6> upsilon_image(BarLetter c) {
  if (c.value == 0) throw std::domain_error("upsilon needs letter values >= 1");
  if (!c.barred) return {0, 0, 1, 1, 0, c.value - 1};
  return {1, 0, 0, 1, 1, c.value - 1};
}

Word tau(const BarWord& w) {
  Word out;
  out.reserve(w.size() * 5);
  for (BarLetter c : w) {
    const auto img = tau_image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word upsilon(const BarWord& w) {
  Word out;
  out.reserve(w.size() * 6);
  for (BarLetter c : w) {
    const auto img = upsilon_image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

namespace {

template <class Coding>
void stream_coded(std::size_t n, const std::function<void(Letter)>& sink, Coding coding) {
  PhiStream stream;
  std::size_t emitted = 0;
  while (emitted < n) {
    for (Letter c : coding(stream.next())) {
      if (emitted == n) break;
      sink(c);
      ++emitted;
    }
  }
}

}  // namespace

void stream_w32(std::size_t n, const std::function<void(Letter)>& sink) {
  stream_coded(n, sink, tau_image);
}

void stream_x32(std::size_t n, const std::function<void(Letter)>& sink) {
  stream_coded(n, sink, upsilon_image);
}

Word w32_via_morphism(std::size_t n) {
  Word out;
  out.reserve(n);
  stream_w32(n, [&](Letter c) { out.push_back(c); });
  return out;
}

Word x32_via_morphism(std::size_t n) {
  Word out;
  out.reserve(n);
  stream_x32(n, [&](Letter c) { out.push_back(c); });
  return out;
}

}  // namespace powfree::morph
