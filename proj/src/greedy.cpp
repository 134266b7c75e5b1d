#include "powfree/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace powfree {

namespace {

// Periods below this are scanned serially even under Exec::Parallel; the
// fork/join costs more than the scan.
constexpr std::size_t kParallelCutoff = 4096;

}  // namespace

GreedyState::GreedyState(Exponent e, Mode mode, Exec exec)
    : exponent_(e), mode_(mode), exec_(exec) {}

Letter GreedyState::next_letter() const {
  Exec exec = exec_;
  if (candidate_count(size() + 1, exponent_, mode_) < kParallelCutoff) exec = Exec::Serial;
  const std::vector<Letter> banned = banned_next_letters(index_, exponent_, mode_, exec);

  const Letter bound = size() == 0 ? 0 : checked_add(max_seen_, 1);
  Letter c = 0;
  for (Letter b : banned) {
    if (b != c) break;
    ++c;
  }
  if (c > bound) {
    throw std::logic_error("greedy candidate exceeded max letter + 1");
  }
  return c;
}

Letter GreedyState::extend() {
  const Letter c = next_letter();
  index_.push_back(c);
  max_seen_ = std::max(max_seen_, c);
  return c;
}

Word generate(const Exponent& e, Mode mode, std::size_t n, Exec exec) {
  GreedyState state(e, mode, exec);
  state.reserve(n);
  while (state.size() < n) state.extend();
  return state.word();
}

Word generate_reference(const Exponent& e, Mode mode, std::size_t n) {
  Word w;
  w.reserve(n);
  while (w.size() < n) {
    Letter c = 0;
    w.push_back(c);
    while (forbidden_suffix(w, e, mode)) w.back() = ++c;
  }
  return w;
}

}  // namespace powfree
