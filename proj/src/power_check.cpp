#include "powfree/power_check.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace powfree {

std::string_view to_string(Exec exec) {
  return exec == Exec::Serial ? "serial" : "parallel";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::Threshold ? "threshold" : "exact";
}

Mode parse_mode(std::string_view text) {
  if (text == "threshold") return Mode::Threshold;
  if (text == "exact") return Mode::Exact;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::size_t candidate_count(std::size_t n, const Exponent& e, Mode mode) {
  if (mode == Mode::Exact) return n / e.p();
  // ceil(P*p/q) <= n  <=>  P*p <= n*q
  const unsigned __int128 scaled = static_cast<unsigned __int128>(n) * e.q();
  return static_cast<std::size_t>(scaled / e.p());
}

Candidate candidate_at(std::size_t k, const Exponent& e, Mode mode) {
  if (mode == Mode::Exact) {
    const std::size_t t = k + 1;
    return {e.q() * t, e.p() * t};
  }
  const std::size_t period = k + 1;
  return {period, e.min_length_for_period(period)};
}

std::optional<Occurrence> forbidden_suffix(WordView w, const Exponent& e, Mode mode) {
  const std::size_t n = w.size();
  const std::size_t count = candidate_count(n, e, mode);
  for (std::size_t k = 0; k < count; ++k) {
    const auto [period, length] = candidate_at(k, e, mode);
    std::size_t matched = 0;
    while (matched < length - period && w[n - 1 - matched] == w[n - 1 - period - matched]) {
      ++matched;
    }
    if (matched < length - period) continue;

    if (mode == Mode::Threshold) {
      while (matched < n - period && w[n - 1 - matched] == w[n - 1 - period - matched]) {
        ++matched;
      }
      return Occurrence{n - period - matched, period, period + matched};
    }
    return Occurrence{n - length, period, length};
  }
  return std::nullopt;
}

namespace {

bool suffix_has_period(const LceIndex& idx, std::size_t n, Candidate c) {
  return idx.blocks_equal(n - c.length, n - c.length + c.period, c.length - c.period);
}

Occurrence make_witness(const LceIndex& idx, std::size_t n, Candidate c, Mode mode) {
  if (mode == Mode::Threshold) {
    const std::size_t run = idx.lce_backward(n - 1, n - 1 - c.period);
    return Occurrence{n - c.period - run, c.period, c.period + run};
  }
  return Occurrence{n - c.length, c.period, c.length};
}

}  // namespace

std::optional<Occurrence> forbidden_suffix(const LceIndex& idx, const Exponent& e, Mode mode,
                                           std::size_t end, Exec exec) {
  if (end >= idx.size()) throw std::out_of_range("suffix end outside word");
  const std::size_t n = end + 1;
  const auto hit = first_index_where(0, candidate_count(n, e, mode), exec, [&](std::size_t k) {
    return suffix_has_period(idx, n, candidate_at(k, e, mode));
  });
  if (!hit) return std::nullopt;
  return make_witness(idx, n, candidate_at(*hit, e, mode), mode);
}

std::optional<Occurrence> contains_forbidden(const LceIndex& idx, const Exponent& e, Mode mode,
                                             Exec exec) {
  const auto end = first_index_where(0, idx.size(), exec, [&](std::size_t i) {
    return forbidden_suffix(idx, e, mode, i).has_value();
  });
  if (!end) return std::nullopt;
  return forbidden_suffix(idx, e, mode, *end);
}

std::optional<Occurrence> contains_forbidden(WordView w, const Exponent& e, Mode mode,
                                             Exec exec) {
  return contains_forbidden(LceIndex(w), e, mode, exec);
}

std::vector<Letter> banned_next_letters(const LceIndex& idx, const Exponent& e, Mode mode,
                                        Exec exec) {
  const std::size_t n = idx.size();
  const std::size_t count = candidate_count(n + 1, e, mode);
  // The new letter sits at index n; candidate (P, L) bans w[n - P] when the
  // L - 1 letters already present have period P.
  auto bans = [&](std::size_t k) -> std::optional<Letter> {
    const Candidate c = candidate_at(k, e, mode);
    const std::size_t begin = n + 1 - c.length;
    if (!idx.blocks_equal(begin, begin + c.period, c.length - c.period - 1)) return std::nullopt;
    return idx[n - c.period];
  };

  std::vector<Letter> banned;
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < count; ++k) {
      if (auto c = bans(k)) banned.push_back(*c);
    }
  } else {
#pragma omp parallel
    {
      std::vector<Letter> local;
#pragma omp for schedule(static) nowait
      for (long long k = 0; k < static_cast<long long>(count); ++k) {
        if (auto c = bans(static_cast<std::size_t>(k))) local.push_back(*c);
      }
#pragma omp critical(powfree_banned_merge)
      banned.insert(banned.end(), local.begin(), local.end());
    }
  }
  std::sort(banned.begin(), banned.end());
  banned.erase(std::unique(banned.begin(), banned.end()), banned.end());
  return banned;
}

}  // namespace powfree
