#pragma once

#include <cstddef>
#include <functional>

namespace fraclog {

/// Number of workers used by parallel_for: hardware concurrency, capped by
/// the FRACLOG_THREADS environment variable when it is set to a positive
/// integer.
std::size_t worker_count();

/// Runs fn(i) for every i in [0, count) across worker_count() threads.
/// fn must be safe to call concurrently; callers preserve determinism by
/// writing results into slot i of a pre-sized buffer.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace fraclog
