#include "pfs/solve.hpp"

#include <stdexcept>

namespace pfs {

namespace {

void check_solver_cap(int n) {
    if (n > kEnumCap)
        throw std::length_error("instance arity " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(kEnumCap));
}

using Clock = std::chrono::steady_clock;

} // namespace

SolveResult solve_exhaustive(const ProblemInstance& inst) {
    const int n = inst.arity();
    check_solver_cap(n);
    const auto start = Clock::now();

    SolveResult result;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t code = 0; code < total; ++code) {
        Assignment asg(n, code);
        ++result.pfs_evaluations;
        if (!inst.pfs.eval(asg)) continue;
        ++result.feasible_count;
        ++result.cost_evaluations;
        const long long cost = evaluate_cost(inst, asg);
        if (!result.best || cost > result.best->cost)
            result.best = Solution{asg, cost, true};
        // Ascending scan: the first assignment attaining a cost is already the
        // smallest encoding, so ties never replace the incumbent.
    }
    result.elapsed = Clock::now() - start;
    return result;
}

namespace {

struct BnbState {
    const HeavyTupleInstance& inst;
    int n;
    std::vector<long long> suffix_max; // suffix_max[i] = max weight of blocks i..k-1
    SolveResult result;

    void descend(int block, std::uint32_t prefix_code, long long prefix_weight) {
        if (block == inst.k) {
            Assignment asg(n, prefix_code);
            ++result.pfs_evaluations;
            if (!inst.pfs.eval(asg)) return;
            ++result.feasible_count;
            ++result.cost_evaluations;
            if (!result.best || prefix_weight > result.best->cost)
                result.best = Solution{asg, prefix_weight, true};
            return;
        }
        if (result.best &&
            prefix_weight + suffix_max[std::size_t(block)] <= result.best->cost)
            return; // even the best completion cannot beat the incumbent
        for (std::uint32_t bits = 0; bits < 16; ++bits)
            descend(block + 1, (prefix_code << 4) | bits,
                    prefix_weight + tetrad_weight(inst.rules[std::size_t(block)], bits));
    }
};

} // namespace

SolveResult solve_branch_and_bound(const HeavyTupleInstance& inst) {
    const int n = inst.arity();
    check_solver_cap(n);
    const auto start = Clock::now();

    BnbState state{inst, n, std::vector<long long>(std::size_t(inst.k) + 1, 0), {}};
    for (int i = inst.k - 1; i >= 0; --i)
        state.suffix_max[std::size_t(i)] =
            state.suffix_max[std::size_t(i) + 1] + max_tetrad_weight(inst.rules[std::size_t(i)]);
    state.descend(0, 0, 0);

    state.result.elapsed = Clock::now() - start;
    return state.result;
}

std::uint64_t feasible_count(const ProblemInstance& inst) {
    const int n = inst.arity();
    check_solver_cap(n);
    return count_satisfying(inst.pfs, n);
}

PmeResult pme_max(std::span<const long long> values) {
    if (values.empty())
        throw std::domain_error("pme_max requires a nonempty array");
    PmeResult r{1, values[0], 0};
    for (std::size_t i = 1; i < values.size(); ++i) {
        ++r.comparisons;
        if (values[i] > r.value) {
            r.value = values[i];
            r.index = i + 1;
        }
    }
    return r;
}

} // namespace pfs
