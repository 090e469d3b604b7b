#pragma once

#include <cstddef>
#include <functional>

namespace lieframe {

inline constexpr double kDefaultTolerance = 1e-9;

// Process-wide zero threshold. Reads LIEFRAME_TOL on first use.
double tolerance();
void set_tolerance(double tol);

// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers write results
// into preallocated slots so output order never depends on scheduling.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace lieframe
