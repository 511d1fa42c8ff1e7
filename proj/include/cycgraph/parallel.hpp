#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace cycgraph {

// Worker count for the OpenMP kernels: CYCGRAPH_THREADS when set to a
// positive integer, otherwise the OpenMP default.
int worker_count();

// Runs body(i) for i in [0, n) across worker_count() threads with dynamic
// scheduling. The first exception thrown by any iteration is rethrown after
// the loop.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cycgraph
