#pragma once

#include <random>
#include <vector>

#include "pfs/boolean.hpp"
#include "pfs/encoders.hpp"

namespace pfs::testing {

inline Dnf random_dnf(std::mt19937_64& rng, int n, int max_cubes) {
    Dnf d;
    const int cube_count = int(rng() % std::uint64_t(max_cubes + 1));
    for (int c = 0; c < cube_count; ++c) {
        std::vector<Literal> lits;
        for (int v = 1; v <= n; ++v) {
            switch (rng() % 3) {
            case 0: lits.push_back({v, false}); break;
            case 1: lits.push_back({v, true}); break;
            default: break;
            }
        }
        d.cubes.emplace_back(std::move(lits));
    }
    return d;
}

/// Random simple graph; each possible edge kept with probability ~1/2.
inline Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 2) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// The worked five-cube independence pointer, written out literal by literal
/// so tests do not depend on the encoder under test.
inline bool fig2_mis_dnf_by_hand(const Assignment& a) {
    const bool x1 = a.bit(1), x2 = a.bit(2), x3 = a.bit(3), x4 = a.bit(4), x5 = a.bit(5);
    return (x1 && !x2 && !x4 && !x5) || (x2 && !x1 && !x5) || (x3 && !x4 && !x5) ||
           (x4 && !x1 && !x3 && !x5) || (x5 && !x1 && !x2 && !x3 && !x4);
}

/// The worked tetrad weights, transcribed as the original conditional rules.
inline long long tetrad_weight_by_hand(bool x1, bool x2, bool x3, bool x4) {
    long long w1, w2, w3, w4;
    if (!x1) w1 = 5; else w1 = 13;
    if (!x1 && !x2) w2 = 7;
    else if (!x1 && x2) w2 = 10;
    else if (x1 && !x2) w2 = 12;
    else w2 = 4;
    if (!x3) w3 = 3; else w3 = 8;
    if (!x3 && !x4) w4 = 2;
    else if (!x3 && x4) w4 = 15;
    else if (x3 && !x4) w4 = 3;
    else w4 = 17;
    return w1 + w2 + w3 + w4;
}

// Column f of the worked 16-row table, row order 0000..1111.
inline constexpr bool kTableF[16] = {1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0};

// Column W of the same table.
inline constexpr long long kTableW[16] = {17, 30, 23, 37, 20, 33, 26, 40,
                                          30, 43, 36, 50, 22, 35, 28, 42};

/// The closed-form pointer, written directly in C++.
inline bool formula_pfs_by_hand(bool x1, bool x2, bool x3, bool x4) {
    return ((!x1 || x2 || !x3) && !x4) || (x1 && x2 && !x3);
}

} // namespace pfs::testing
