// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Index-parallel loops with a serial reference path. Every parallel kernel
// in the library writes into per-index slots and reduces afterwards in index
// order, so serial and parallel runs produce identical results.

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef QMS_HAVE_OPENMP
#include <omp.h>
#endif

namespace qms {

enum class Execution { serial, parallel };

inline int max_threads() {
#ifdef QMS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls f(i) for i in [0, n). Exceptions thrown by f are captured per index
/// and the one with the lowest index is rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#ifdef QMS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qms
