// parallel.hpp — Tiny index-range parallel map used for per-frequency solves

#pragma once

#include <cstddef>
#include <functional>

namespace wqed {

// Number of worker threads: WQED_WORKERS env var if set (>=1), else
// hardware_concurrency(), else 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks over
// worker_count() threads; fn must be safe to call concurrently for distinct i.
// Exceptions thrown by fn are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wqed
