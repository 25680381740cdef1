#pragma once

#include <functional>

namespace fibpad {

/// Worker count to use: `requested` if positive, else the FIBPAD_THREADS
/// environment variable if set and positive, else hardware concurrency.
int resolve_thread_count(int requested);

/// Runs fn(0) .. fn(count-1) on up to `threads` workers. Iterations must be
/// independent; exceptions are captured and the first one is rethrown after
/// all workers join.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace fibpad
