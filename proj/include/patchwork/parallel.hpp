#ifndef PATCHWORK_PARALLEL_HPP
#define PATCHWORK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace patchwork {

/** Worker count: PATCHWORK_THREADS if set and positive, else the hardware concurrency. */
std::size_t worker_count();

/**
 * Runs fn(i) for i in [0, count) on up to worker_count() threads. The first
 * exception thrown by any call is rethrown after all workers finish.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}   // namespace patchwork

#endif
