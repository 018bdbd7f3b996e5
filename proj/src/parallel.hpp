#pragma once

#include <cstddef>
#include <functional>

namespace pgx {

// Worker count for verification scans: hardware concurrency, optionally
// capped by the PGX_THREADS environment variable.
std::size_t worker_count();

// Splits [0, n) into contiguous chunks, runs fn(begin, end, chunk) on worker
// threads, and returns with all chunks finished. Chunk indices are in range
// order so callers can merge results deterministically.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace pgx
