#pragma once

namespace mcluster {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { serial, parallel };

/// Caps OpenMP threads from MCLUSTER_THREADS if that variable is set.
void apply_thread_limit_from_env();

inline int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace mcluster
