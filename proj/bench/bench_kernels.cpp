// Serial reference kernels vs their OpenMP versions.
//
//   bench_kernels [N]        (default N = 10000)
//
// Thread count follows OMP_NUM_THREADS.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "powfree/greedy.hpp"
#include "powfree/power_check.hpp"
#include "powfree/verify.hpp"

using namespace powfree;

namespace {

double time_ms(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(12) << serial << std::setw(12) << parallel
            << std::setw(9) << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10000;
  const Exponent e(3, 2);
  std::cout << "threads: " << omp_get_max_threads() << "  N = " << n << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial ms"
            << std::setw(12) << "omp ms" << std::setw(10) << "speedup\n";

  Word ref;
  double s = time_ms([&] { ref = generate(e, Mode::Threshold, n, Exec::Serial); });
  Word par;
  double p = time_ms([&] { par = generate(e, Mode::Threshold, n, Exec::Parallel); });
  row("greedy 3/2 threshold", s, p);
  if (ref != par) {
    std::cerr << "greedy kernels disagree\n";
    return 1;
  }

  s = time_ms([&] { generate(e, Mode::Exact, n, Exec::Serial); });
  p = time_ms([&] { generate(e, Mode::Exact, n, Exec::Parallel); });
  row("greedy 3/2 exact", s, p);

  const LceIndex idx(ref);
  s = time_ms([&] { (void)contains_forbidden(idx, e, Mode::Threshold, Exec::Serial); });
  p = time_ms([&] { (void)contains_forbidden(idx, e, Mode::Threshold, Exec::Parallel); });
  row("contains_forbidden", s, p);

  const std::size_t m = std::min<std::size_t>(n, 2000);
  s = time_ms([&] { verify::check_minimality(verify::Source::W32Closed, e, Mode::Threshold, m, Exec::Serial); });
  p = time_ms([&] { verify::check_minimality(verify::Source::W32Closed, e, Mode::Threshold, m, Exec::Parallel); });
  row("check_minimality (N<=2000)", s, p);

  s = time_ms([&] { verify::check_x_squares(n, Exec::Serial); });
  p = time_ms([&] { verify::check_x_squares(n, Exec::Parallel); });
  row("check_x_squares", s, p);

  s = time_ms([&] { verify::check_ell_claim(2000, Exec::Serial); });
  p = time_ms([&] { verify::check_ell_claim(2000, Exec::Parallel); });
  row("check_ell_claim (n<=2000)", s, p);
  return 0;
}
