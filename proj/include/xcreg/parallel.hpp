#pragma once

#include <cstddef>
#include <functional>

namespace xcreg {

/// Worker cap: XCREG_THREADS when set, else hardware concurrency.
std::size_t max_threads();
void set_max_threads(std::size_t n);

/// Runs fn(0..count-1) across worker threads. Each index must write only
/// its own output slot; results are then independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace xcreg
