// Compares the augmentation-counting paths: the serial reference (one
// subset at a time through the public matrix route), the tight kernel on a
// single range, and the OpenMP-parallel sweep.  Counts must agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "legbraid/augment.hpp"
#include "legbraid/braid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace legbraid;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
  return std::chrono::duration<double>(b - a).count();
}

void bench_word(const std::string& name, const std::string& text) {
  BraidWord b = parse_braid_word(text);
  std::uint64_t guard = std::uint64_t(1) << 28;

  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t serial = count_augmentations_serial(b, guard);
  auto t1 = std::chrono::steady_clock::now();
  std::uint64_t kernel = count_augmentations(b, 1, guard);
  auto t2 = std::chrono::steady_clock::now();
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::uint64_t parallel = count_augmentations(b, threads, guard);
  auto t3 = std::chrono::steady_clock::now();

  double ts = seconds(t0, t1), tk = seconds(t1, t2), tp = seconds(t2, t3);
  std::printf("%-12s w=%2d q=%d count=%-8llu reference %8.3fs  kernel %8.3fs  "
              "parallel(%d) %8.3fs  kernel speedup %5.1fx  thread speedup %4.1fx\n",
              name.c_str(), b.length(), b.strands,
              static_cast<unsigned long long>(serial), ts, tk, threads, tp,
              ts / tk, tk / tp);
  if (serial != kernel || kernel != parallel) {
    std::printf("MISMATCH: serial=%llu kernel=%llu parallel=%llu\n",
                static_cast<unsigned long long>(serial),
                static_cast<unsigned long long>(kernel),
                static_cast<unsigned long long>(parallel));
    std::exit(1);
  }
}

}  // namespace

int main() {
  bench_word("torus_3_6", "1 2 1 2 1 2 1 2 1 2 1 2");
  bench_word("16n_92582", "1 2 2 3 4 3 1 1 2 2 3 3 2 4 3 3");
  bench_word("16n_29507", "1 2 2 3 1 3 4 1 2 4 2 3 3 3 4 2");
  bench_word("torus_5_4", "1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4");
  bench_word("torus_2_22", "s1^22");
  return 0;
}
