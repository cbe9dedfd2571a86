#pragma once

#include <cstddef>
#include <functional>

namespace contlog {

// Worker count from the CONTLOG_THREADS environment variable; unset, 0 or
// unparsable means std::thread::hardware_concurrency().
unsigned default_thread_count();

// Calls body(i) for every i in [0, count) using up to `threads` workers
// (0 = default_thread_count()).  Work items must write only to storage
// owned by their index.  If any call throws, the exception from the lowest
// failing index is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace contlog
