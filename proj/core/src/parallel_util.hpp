#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace isofrag::detail {

/// Runs fn(0..task_count-1) across `threads` workers, dynamic order. Callers
/// needing determinism must merge results by task index, never by
/// completion order.
template <typename Fn>
void run_tasks(int threads, std::size_t task_count, Fn&& fn) {
    if (threads <= 1 || task_count <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) fn(t);
        return;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    int workers = std::min<int>(threads, static_cast<int>(hw));
    workers = std::min<int>(workers, static_cast<int>(task_count));
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= task_count) return;
            fn(t);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int i = 1; i < workers; ++i) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

}  // namespace isofrag::detail
