#pragma once

#include <cstddef>
#include <functional>

namespace smolns {

// Worker count used by parallel_for. Resolution order: set_thread_count(),
// the SMOLNS_THREADS environment variable, hardware concurrency.
int thread_count();

// n <= 0 restores the environment/hardware default.
void set_thread_count(int n);

// Runs fn(i) for i in [0, n). Items must write to disjoint state; under that
// contract the result is identical for every thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Deterministic reductions: per-item values are stored and combined in index
// order on the calling thread, so the result does not depend on scheduling.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);
double parallel_max(std::size_t n, const std::function<double(std::size_t)>& term);
double parallel_min(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace smolns
