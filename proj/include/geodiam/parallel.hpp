#pragma once

namespace geodiam {

// Serial is the reference path used by tests; Parallel runs the OpenMP kernel.
// Both must produce identical results.
enum class Exec { Serial, Parallel };

// Applies GEODIAM_THREADS (0 or unset = runtime default).
void configure_threads_from_env();
int max_threads();

}  // namespace geodiam
