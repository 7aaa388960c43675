/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qrphish {

// Worker cap for all parallel sections (CLI --threads). Results never depend
// on this value: work is partitioned into fixed chunks and floating-point
// partials are combined in chunk order.
void set_max_threads(unsigned n);
unsigned max_threads();

namespace detail {
void run_tasks(std::size_t n_tasks, const std::function<void(std::size_t)>& task);
}

// fn(i) for i in [0, n); elements must be independent.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    detail::run_tasks(n, [&](std::size_t i) { fn(i); });
}

// fn(chunk_index, begin, end) over fixed-size chunks of [0, n). Chunk
// boundaries depend only on n and chunk_size, so per-chunk results can be
// combined in chunk order for schedule-independent reductions.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t chunk_size, Fn&& fn) {
    if (n == 0) return;
    const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    detail::run_tasks(n_chunks, [&](std::size_t c) {
        const std::size_t begin = c * chunk_size;
        const std::size_t end = std::min(n, begin + chunk_size);
        fn(c, begin, end);
    });
}

inline std::size_t num_chunks(std::size_t n, std::size_t chunk_size) {
    return (n + chunk_size - 1) / chunk_size;
}

}  // namespace qrphish
