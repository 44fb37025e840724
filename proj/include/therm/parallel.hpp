#pragma once

#include <cstddef>
#include <functional>

namespace therm {

// Process-wide default worker count (CLI --threads). 0 = hardware concurrency.
void set_default_threads(int n);
int default_threads();

// Runs fn(begin, end) over [0, n) split into contiguous blocks, one per
// worker. Blocks depend only on (n, threads), so any per-block serial
// accumulation is bitwise reproducible for a fixed thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace therm
