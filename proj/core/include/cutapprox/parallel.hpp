#ifndef CUTAPPROX_PARALLEL_HPP
#define CUTAPPROX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cutapprox::detail {

/// Worker count: CUTAPPROX_THREADS env var caps it, 0 or unset means all
/// hardware threads.
int worker_count();

/// Runs body(begin, end) over a static partition of [0, n).  Results must
/// be written to per-index slots; the partition never influences values,
/// so output is identical for any worker count.  The first exception
/// thrown by a worker is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cutapprox::detail

#endif
