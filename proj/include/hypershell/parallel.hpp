#pragma once

#include <functional>

namespace hypershell {

/// Batch map over [0, n): threads == 1 runs the serial reference path,
/// threads == 0 uses the OpenMP default team, threads > 1 pins the team size.
/// Bodies must write only to disjoint slots; the merge order is by index, so
/// serial and parallel runs produce identical results.
void parallel_for(long n, int threads, const std::function<void(long)>& body);

bool openmp_enabled();

}  // namespace hypershell
