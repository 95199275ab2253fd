#pragma once

#include <functional>

namespace stiefel {

/// Worker threads to use: STIEFEL_THREADS when set and positive, otherwise
/// the hardware concurrency (at least 1).
int worker_count();

/// Runs body(task) for task in [0, tasks) on up to `workers` threads. Tasks
/// are dealt round-robin; results must not depend on the schedule.
void parallel_for(int tasks, int workers, const std::function<void(int)>& body);

}  // namespace stiefel
