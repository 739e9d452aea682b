#pragma once

namespace acind {

/// Thread cap for internal parallelism. Resolution order: value set through
/// set_max_threads(), else the ACIND_THREADS environment variable, else the
/// hardware count. All parallel loops use fixed work partitions, so results
/// are bitwise identical for any thread count.
int max_threads();

/// 0 means auto (hardware count).
void set_max_threads(int n);

}  // namespace acind
