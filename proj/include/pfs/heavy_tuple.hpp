#pragma once

#include <cstdint>
#include <vector>

#include "pfs/problem.hpp"
#include "pfs/tetrad.hpp"

namespace pfs {

/// Weighted-tuple problem over n = 4k variables: per-block weight rules plus
/// a pointer of feasible solutions of arity n.
struct HeavyTupleInstance {
    int k = 0;
    std::vector<TetradWeightRule> rules;
    BooleanFunction pfs;

    int arity() const { return 4 * k; }
};

HeavyTupleInstance make_heavy_tuple(std::vector<TetradWeightRule> rules,
                                    BooleanFunction pfs);

/// w(Σ) = T_1 + ... + T_k.
long long tuple_weight(const HeavyTupleInstance& inst, const Assignment& asg);

/// The 4-variable pointer as tabulated: true exactly at
/// {0000, 0010, 0100, 0101, 0110, 1000, 1100, 1110}.
BooleanFunction paper_pfs_table();

/// The same pointer as given in closed form:
/// (¬x1 ∨ x2 ∨ ¬x3)·¬x4  ∨  x1·x2·¬x3.
BooleanFunction paper_pfs_formula();

/// Where the tabulated pointer and the closed form disagree (they do, on two
/// assignments).
std::vector<Assignment> paper_divergence();

/// The worked 4-variable instance: k = 1, paper_rule, tabulated pointer.
HeavyTupleInstance paper_instance();

/// x1 XOR g(x2, ..., xn) for a seeded random expression g; balanced by
/// construction and deterministic per (n, seed).
BooleanFunction generate_balanced_pfs(int n, std::uint64_t seed);

/// k random rules with all 12 weights uniform in [lo, hi], plus a generated
/// balanced pointer over 4k variables. Deterministic per inputs.
HeavyTupleInstance generate_instance(int k, std::uint64_t seed,
                                     long long lo, long long hi);

/// View as a generic problem instance (tetrad-sum cost, elements x1..xn).
ProblemInstance to_problem(const HeavyTupleInstance& inst);

} // namespace pfs
