/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "qrphish/parallel.hpp"

#include <algorithm>

namespace qrphish {

namespace {
std::atomic<unsigned> g_max_threads{0};  // 0 = use hardware concurrency
}

void set_max_threads(unsigned n) { g_max_threads.store(n, std::memory_order_relaxed); }

unsigned max_threads() {
    unsigned n = g_max_threads.load(std::memory_order_relaxed);
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::max(1u, n);
}

namespace detail {

void run_tasks(std::size_t n_tasks, const std::function<void(std::size_t)>& task) {
    if (n_tasks == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(max_threads(), n_tasks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n_tasks || failed.load(std::memory_order_relaxed)) return;
            try {
                task(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) threads.emplace_back(body);
    body();
    for (std::thread& t : threads) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace detail

}  // namespace qrphish
