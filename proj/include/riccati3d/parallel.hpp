#pragma once

#include <cstddef>
#include <functional>

namespace riccati3d {

/// Worker count: RICCATI3D_THREADS if set and positive, otherwise the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index must write only its own output slot, which keeps
/// results independent of the thread count. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace riccati3d
