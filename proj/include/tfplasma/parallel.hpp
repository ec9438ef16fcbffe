#pragma once

#include <functional>

namespace tfp {

/// Number of workers used by field-level loops. Resolves once from the
/// SOLVER_THREADS environment variable, defaulting to all hardware cores.
int worker_count();

/// Override the worker count (0 restores the environment default).
void set_worker_count(int n);

/// Runs fn(begin, end) over a partition of [0, n). Partitions are contiguous
/// and callers write to disjoint output slots, so results do not depend on
/// the worker count.
void parallel_ranges(int n, const std::function<void(int, int)>& fn);

} // namespace tfp
