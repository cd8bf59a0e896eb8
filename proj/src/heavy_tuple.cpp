#include "pfs/heavy_tuple.hpp"

#include <random>
#include <stdexcept>

namespace pfs {

namespace {

// Seeds for dependent generators are derived with splitmix64 so that the
// weight stream and the pointer stream never overlap.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bounded draw by modulo reduction over the raw mt19937_64 output. The slight
// bias is irrelevant here and the result is identical on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

ExprPtr random_expr(std::mt19937_64& rng, int lo_var, int hi_var, std::size_t budget) {
    if (budget >= 3) {
        switch (draw(rng, 8)) {
        case 2:
        case 3:
            return expr_not(random_expr(rng, lo_var, hi_var, budget - 1));
        case 4:
        case 5: {
            const std::size_t left = 1 + draw(rng, budget - 2);
            ExprPtr a = random_expr(rng, lo_var, hi_var, left);
            ExprPtr b = random_expr(rng, lo_var, hi_var, budget - 1 - left);
            return draw(rng, 2) ? expr_or(a, b) : expr_and(a, b);
        }
        case 6:
        case 7: {
            const std::size_t left = 1 + draw(rng, budget - 2);
            ExprPtr a = random_expr(rng, lo_var, hi_var, left);
            ExprPtr b = random_expr(rng, lo_var, hi_var, budget - 1 - left);
            return expr_xor(a, b);
        }
        default:
            break; // leaf
        }
    }
    ExprPtr leaf = expr_var(lo_var + int(draw(rng, std::uint64_t(hi_var - lo_var + 1))));
    return draw(rng, 2) ? expr_not(leaf) : leaf;
}

} // namespace

HeavyTupleInstance make_heavy_tuple(std::vector<TetradWeightRule> rules,
                                    BooleanFunction pfs) {
    const int k = int(rules.size());
    if (k < 1) throw std::invalid_argument("heavy tuple needs at least one tetrad rule");
    if (pfs.arity() != 4 * k)
        throw std::invalid_argument("pointer arity must be 4k = " + std::to_string(4 * k));
    return HeavyTupleInstance{k, std::move(rules), std::move(pfs)};
}

long long tuple_weight(const HeavyTupleInstance& inst, const Assignment& asg) {
    return tetrad_sum(inst.rules, asg);
}

BooleanFunction paper_pfs_table() {
    std::vector<bool> values(16, false);
    for (unsigned code : {0u, 2u, 4u, 5u, 6u, 8u, 12u, 14u}) values[code] = true;
    return BooleanFunction::table(make_truth_table(4, std::move(values)));
}

BooleanFunction paper_pfs_formula() {
    ExprPtr clause = expr_or(expr_or(expr_not(expr_var(1)), expr_var(2)),
                             expr_not(expr_var(3)));
    ExprPtr first = expr_and(clause, expr_not(expr_var(4)));
    ExprPtr second = expr_and(expr_and(expr_var(1), expr_var(2)), expr_not(expr_var(3)));
    return BooleanFunction::expr(4, expr_or(first, second));
}

std::vector<Assignment> paper_divergence() {
    return equivalence_diff(paper_pfs_table(), paper_pfs_formula(), 4);
}

HeavyTupleInstance paper_instance() {
    return make_heavy_tuple({paper_rule()}, paper_pfs_table());
}

BooleanFunction generate_balanced_pfs(int n, std::uint64_t seed) {
    if (n < 2)
        throw std::domain_error("balanced pointer generation needs n >= 2");
    std::mt19937_64 rng(seed);
    // x1 never occurs in g, so x1 XOR g flips exactly half of all assignments.
    ExprPtr g = random_expr(rng, 2, n, std::size_t(4) * std::size_t(n) - 2);
    return BooleanFunction::expr(n, expr_xor(expr_var(1), g));
}

HeavyTupleInstance generate_instance(int k, std::uint64_t seed,
                                     long long lo, long long hi) {
    if (k < 1) throw std::domain_error("k must be >= 1");
    if (lo > hi) throw std::domain_error("weight range is empty");
    std::mt19937_64 rng(splitmix64(seed));
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    auto weight = [&] { return lo + (long long)draw(rng, span); };
    std::vector<TetradWeightRule> rules;
    rules.reserve(std::size_t(k));
    for (int i = 0; i < k; ++i) {
        TetradWeightRule r;
        for (auto& w : r.w1) w = weight();
        for (auto& w : r.w2) w = weight();
        for (auto& w : r.w3) w = weight();
        for (auto& w : r.w4) w = weight();
        rules.push_back(r);
    }
    BooleanFunction pfs = generate_balanced_pfs(4 * k, splitmix64(seed ^ 0x5bf0325f5e1cd4e3ULL));
    return make_heavy_tuple(std::move(rules), std::move(pfs));
}

ProblemInstance to_problem(const HeavyTupleInstance& inst) {
    return ProblemInstance{ElementSet::numbered(inst.arity(), "x"), inst.pfs,
                           TetradCost{inst.rules}};
}

} // namespace pfs
