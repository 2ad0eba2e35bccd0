#ifndef KOLMO_PARALLEL_HPP
#define KOLMO_PARALLEL_HPP

#include <cstddef>
#include <vector>

#ifdef KOLMO_HAVE_OPENMP
#include <omp.h>
#endif

namespace kolmo {
namespace par {

inline int max_threads() {
#ifdef KOLMO_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef KOLMO_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Parallel loop over [0, n). The body must write only to its own index range;
// results are then independent of scheduling.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& body) {
#ifdef KOLMO_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#endif
}

// Fixed block size for tree-shaped sums. The partition depends only on n,
// never on the thread count, so the reduction is bit-stable.
inline constexpr std::ptrdiff_t kSumBlock = 4096;

// Deterministic sum of term(i) for i in [0, n): per-block partial sums are
// computed independently (possibly in parallel) and combined in block order.
template <typename Fn>
double block_sum(std::ptrdiff_t n, Fn&& term) {
  if (n <= 0) return 0.0;
  const std::ptrdiff_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(static_cast<size_t>(nblocks), 0.0);
  parallel_for(nblocks, [&](std::ptrdiff_t b) {
    const std::ptrdiff_t lo = b * kSumBlock;
    const std::ptrdiff_t hi = lo + kSumBlock < n ? lo + kSumBlock : n;
    double s = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<size_t>(b)] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

// Deterministic max (order independent).
template <typename Fn>
double block_max(std::ptrdiff_t n, Fn&& term, double init) {
  if (n <= 0) return init;
  const std::ptrdiff_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(static_cast<size_t>(nblocks), init);
  parallel_for(nblocks, [&](std::ptrdiff_t b) {
    const std::ptrdiff_t lo = b * kSumBlock;
    const std::ptrdiff_t hi = lo + kSumBlock < n ? lo + kSumBlock : n;
    double m = init;
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const double v = term(i);
      if (v > m) m = v;
    }
    partial[static_cast<size_t>(b)] = m;
  });
  double m = init;
  for (double v : partial) {
    if (v > m) m = v;
  }
  return m;
}

}  // namespace par
}  // namespace kolmo

#endif
