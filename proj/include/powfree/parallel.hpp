#pragma once

// Range-partitioned search used by the scanning kernels. Every parallel
// kernel has a serial twin selected by Exec::Serial; the serial path is the
// reference the tests compare against.

#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <string_view>

#include <omp.h>

namespace powfree {

enum class Exec { Serial, Parallel };

std::string_view to_string(Exec exec);

/// Smallest i in [begin, end) with pred(i), or nullopt.
template <class Pred>
std::optional<std::size_t> first_index_where(std::size_t begin, std::size_t end, Exec exec,
                                             Pred&& pred) {
  if (begin >= end) return std::nullopt;
  if (exec == Exec::Serial) {
    for (std::size_t i = begin; i < end; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
  std::exception_ptr failure;
  const auto count = static_cast<long long>(end - begin);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (long long k = 0; k < count; ++k) {
    const std::size_t i = begin + static_cast<std::size_t>(k);
    if (i >= best) continue;
    try {
      if (pred(i)) best = i;
    } catch (...) {
#pragma omp critical(powfree_first_index_where)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (best == kNone) return std::nullopt;
  return best;
}

/// Calls body(i) for every i in [begin, end). Bodies must write only to
/// per-index state.
template <class Body>
void for_each_index(std::size_t begin, std::size_t end, Exec exec, Body&& body) {
  if (begin >= end) return;
  if (exec == Exec::Serial) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<long long>(end - begin);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < count; ++k) {
    try {
      body(begin + static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(powfree_for_each_index)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace powfree
