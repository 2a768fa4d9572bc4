#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hb {

// Execution lane selector.  Every parallel kernel in the library has a
// serial reference path; tests assert the two produce identical results
// and hb_bench compares their timings.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

template <class F>
void parallel_for(Exec ex, long n, F&& body) {
#ifdef _OPENMP
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)ex;
#endif
  for (long i = 0; i < n; ++i) body(i);
}

}  // namespace hb
