#pragma once

#include <cstddef>
#include <functional>

namespace clusterbd {

/// Worker count: CLUSTERBD_THREADS when set to a positive integer, otherwise the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Each index writes only its own output slot, so results do
/// not depend on scheduling. If any call throws, the exception of the lowest failing index is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace clusterbd
