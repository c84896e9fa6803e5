#pragma once

#include <cstddef>

namespace edval {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path exists for cross-checks.
enum class Exec { Serial, Parallel };

/// Below this many independent work items the parallel kernels stay serial.
inline constexpr std::size_t kParallelThreshold = 32;

int max_threads();

}  // namespace edval
