#pragma once

namespace recoil {

// Execution policy for the heavy kernels. Both paths share the same per-slice
// worker functions and reduce partial results in a fixed index order, so
// serial and parallel runs are bitwise identical.
enum class Exec { serial, parallel };

// True when the build has OpenMP support compiled in.
bool openmp_enabled();

// Number of threads a parallel region would use (1 without OpenMP).
int max_threads();

} // namespace recoil
