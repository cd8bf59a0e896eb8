#include "pfs/tetrad.hpp"

#include <stdexcept>

namespace pfs {

TetradWeightRule paper_rule() {
    TetradWeightRule r;
    r.w1 = {5, 13};
    r.w2 = {7, 10, 12, 4};
    r.w3 = {3, 8};
    r.w4 = {2, 15, 3, 17};
    return r;
}

long long tetrad_weight(const TetradWeightRule& rule, unsigned bits) {
    if (bits > 0xF)
        throw std::invalid_argument("tetrad must be exactly 4 bits");
    const unsigned x1 = (bits >> 3) & 1u;
    const unsigned x2 = (bits >> 2) & 1u;
    const unsigned x3 = (bits >> 1) & 1u;
    const unsigned x4 = bits & 1u;
    return rule.w1[x1] + rule.w2[2 * x1 + x2] + rule.w3[x3] + rule.w4[2 * x3 + x4];
}

long long max_tetrad_weight(const TetradWeightRule& rule) {
    long long best = tetrad_weight(rule, 0);
    for (unsigned bits = 1; bits < 16; ++bits)
        best = std::max(best, tetrad_weight(rule, bits));
    return best;
}

long long tetrad_sum(const std::vector<TetradWeightRule>& rules, const Assignment& asg) {
    const int n = int(rules.size()) * 4;
    if (asg.size() != n)
        throw std::invalid_argument("assignment length " + std::to_string(asg.size()) +
                                    " does not match " + std::to_string(rules.size()) +
                                    " tetrad blocks");
    long long total = 0;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const unsigned bits = (asg.code() >> (n - 4 * (int(i) + 1))) & 0xFu;
        total += tetrad_weight(rules[i], bits);
    }
    return total;
}

} // namespace pfs
