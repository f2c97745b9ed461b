#ifndef CONEBB_PARALLEL_HPP
#define CONEBB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace conebb {

/// Calls body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; the first exception thrown by a worker is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

/// Worker count when the user gives none: CONEBB_THREADS, else hardware concurrency.
[[nodiscard]] int default_thread_count();

}  // namespace conebb

#endif  // CONEBB_PARALLEL_HPP
