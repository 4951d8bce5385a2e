#pragma once

namespace skqaoa {

/// Worker count for data-parallel loops: SKQAOA_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
int worker_threads();

}  // namespace skqaoa
