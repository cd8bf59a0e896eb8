#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

#include "pfs/heavy_tuple.hpp"
#include "pfs/problem.hpp"

namespace pfs {

struct SolveResult {
    std::optional<Solution> best;        // absent iff nothing feasible was seen
    std::uint64_t feasible_count = 0;
    std::uint64_t pfs_evaluations = 0;
    std::uint64_t cost_evaluations = 0;
    std::chrono::nanoseconds elapsed{0};

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }
};

/// Visits all 2^n assignments in ascending integer order; among feasible ones
/// returns the maximum cost, ties broken by smallest integer encoding. Cost is
/// evaluated only for feasible assignments, so pfs_evaluations = 2^n and
/// cost_evaluations = feasible_count exactly.
SolveResult solve_exhaustive(const ProblemInstance& inst);

/// Depth-first over tetrad blocks in ascending block-value order, pruning a
/// subtree when prefix weight plus the sum of remaining per-block maxima
/// cannot beat the incumbent. Every surviving leaf is pointer-checked. Returns
/// the same optimum (value and tie-broken argmax) as solve_exhaustive;
/// counters reflect only the leaves actually visited.
SolveResult solve_branch_and_bound(const HeavyTupleInstance& inst);

/// Number of assignments on which the pointer of feasible solutions is true.
std::uint64_t feasible_count(const ProblemInstance& inst);

struct PmeResult {
    std::size_t index = 0;   // 1-based, smallest index attaining the maximum
    long long value = 0;
    std::size_t comparisons = 0;
};

/// Single-pass maximum of an array; comparisons = length - 1.
PmeResult pme_max(std::span<const long long> values);

} // namespace pfs
