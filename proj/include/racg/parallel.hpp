#pragma once

#include <cstddef>
#include <functional>

namespace racg {

// Worker count: hardware concurrency, capped by the RACG_THREADS environment variable.
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Exceptions are
// rethrown on the calling thread (the one with the smallest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace racg
