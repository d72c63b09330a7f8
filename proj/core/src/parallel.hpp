#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace netrobust::detail {

/// Runs body(i) for i in [0, tasks) on up to `jobs` threads. body must not throw.
template <typename Body>
void parallelFor(std::size_t tasks, unsigned jobs, Body &&body) {
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1u), tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1))
                body(i);
        });
}

} // namespace netrobust::detail
