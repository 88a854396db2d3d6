#include "smolns/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace smolns {

namespace {

std::atomic<int> g_thread_override{0};

int default_threads() {
    if (const char* env = std::getenv("SMOLNS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

int thread_count() {
    int n = g_thread_override.load(std::memory_order_relaxed);
    return n > 0 ? n : default_threads();
}

void set_thread_count(int n) {
    g_thread_override.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    // Static striping: worker w handles items w, w+T, w+2T, ... Items write
    // disjoint state, so the assignment does not affect results.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    std::vector<double> partial(n, 0.0);
    parallel_for(n, [&](std::size_t i) { partial[i] = term(i); });
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

double parallel_max(std::size_t n, const std::function<double(std::size_t)>& term) {
    if (n == 0) return 0.0;
    std::vector<double> partial(n, 0.0);
    parallel_for(n, [&](std::size_t i) { partial[i] = term(i); });
    double acc = partial[0];
    for (double v : partial) acc = std::max(acc, v);
    return acc;
}

double parallel_min(std::size_t n, const std::function<double(std::size_t)>& term) {
    if (n == 0) return 0.0;
    std::vector<double> partial(n, 0.0);
    parallel_for(n, [&](std::size_t i) { partial[i] = term(i); });
    double acc = partial[0];
    for (double v : partial) acc = std::min(acc, v);
    return acc;
}

}  // namespace smolns
