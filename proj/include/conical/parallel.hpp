#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conical::parallel {

/// Runs body(i) for i in [0, n) on up to `threads` OpenMP threads
/// (0 = runtime default). Iterations must be independent; results are
/// written by index so the outcome does not depend on the schedule.
/// An exception from any iteration is rethrown after the loop; when several
/// iterations throw, the one with the lowest index wins.
template <typename Body>
void for_each_index(std::size_t n, int threads, Body&& body) {
  std::exception_ptr first;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  std::mutex guard;
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(guard);
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  };
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
#else
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) run(i);
#endif
  if (first) std::rethrow_exception(first);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace conical::parallel
