#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pfs/boolean.hpp"

namespace pfs {

/// Conditional weight rule for one 4-bit block: w1 keys on x1, w2 on (x1,x2),
/// w3 on x3, w4 on (x3,x4). The block weight is the sum of the four summands.
struct TetradWeightRule {
    std::array<long long, 2> w1{}; // index x1
    std::array<long long, 4> w2{}; // index 2*x1 + x2
    std::array<long long, 2> w3{}; // index x3
    std::array<long long, 4> w4{}; // index 2*x3 + x4

    bool operator==(const TetradWeightRule&) const = default;
};

/// The concrete rule whose 16 block weights range from 17 to 50.
TetradWeightRule paper_rule();

/// Weight of one block. `bits` holds (x1,x2,x3,x4) with x1 in the most
/// significant of the low 4 bits; values above 15 are rejected.
long long tetrad_weight(const TetradWeightRule& rule, unsigned bits);

/// Largest of the 16 possible block weights; an admissible bound for pruning.
long long max_tetrad_weight(const TetradWeightRule& rule);

/// Sum of block weights over consecutive 4-bit blocks of `asg`; block i uses
/// rules[i], and the assignment length must be exactly 4 * rules.size().
long long tetrad_sum(const std::vector<TetradWeightRule>& rules, const Assignment& asg);

} // namespace pfs
