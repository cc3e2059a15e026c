#pragma once

#include <cstddef>
#include <functional>

namespace radmom {

// Runs fn(i) for i in [0, n) on up to RADMOM_THREADS worker threads
// (default: hardware concurrency).  Iterations must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::size_t thread_budget();

} // namespace radmom
