#pragma once

namespace qredux {

// Execution policy for the hot kernels. Every parallel kernel keeps a
// serial path; tests compare the two and the bench tool times them.
enum class Exec { Serial, Parallel };

// Thread cap: QREDUX_THREADS if set (>=1), else the OpenMP default.
// Returns 1 when built without OpenMP.
int max_threads();
void set_max_threads(int n);

} // namespace qredux
