#pragma once

#include <cstddef>
#include <functional>

namespace fvlab {

/// std::thread::hardware_concurrency, at least 1.
unsigned default_threads();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Each index is visited exactly once; callers write results into
/// preallocated slots so output order does not depend on scheduling.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace fvlab
