/// @file exec.hpp
/// @brief Process-wide summation mode for the data-parallel kernels.
///
/// Every output frequency of a kernel is accumulated by a single thread in a
/// fixed order, so both modes give bit-identical results; Deterministic also
/// pins the work to the calling thread.
#pragma once

#include <cstddef>
#include <functional>

namespace qns {

enum class Summation { Deterministic, Parallel };

void set_summation(Summation mode);
Summation summation();

/// Number of worker threads used in Parallel mode (hardware concurrency by default).
void set_worker_count(unsigned count);
unsigned worker_count();

/// Runs body(begin, end) over a partition of [0, n). Sequential in
/// Deterministic mode or when only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qns
