#pragma once

#include <cstddef>
#include <functional>

namespace mdisk {

/// Worker count: hardware concurrency, capped by WEIERSTRASS_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, count). Each index is visited exactly once;
/// results must be written to per-index slots to stay deterministic.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace mdisk
