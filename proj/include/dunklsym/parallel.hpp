#pragma once
#include <cstddef>
#include <functional>

namespace dunklsym {

// Worker count: DUNKL_SYM_THREADS if set and positive, otherwise the
// hardware concurrency (the variable set to 0 also means auto).
unsigned thread_count();

// Runs fn(0..n-1) across workers. Callers keep determinism by writing
// results into index-addressed slots. The first exception thrown by any
// worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace dunklsym
