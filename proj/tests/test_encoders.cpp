#include <doctest.h>

#include <random>

#include "pfs/encoders.hpp"
#include "helpers.hpp"

using namespace pfs;

namespace {

Assignment asg(const char* bits) { return Assignment::from_string(bits); }

std::uint64_t choose3(std::size_t d) { return d < 3 ? 0 : d * (d - 1) * (d - 2) / 6; }

} // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    const Graph g = paper_fig2_graph();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(g.incident_edges(1) == std::vector<int>{1, 6, 7});
    CHECK(g.incident_edges(4) == std::vector<int>{4, 5, 6});
    CHECK(g.incident_edges(5) == std::vector<int>{2, 3, 5, 7});
    CHECK(g.neighbors(2) == std::vector<int>{1, 5});
}

TEST_CASE("encode_mis emits one cube per vertex") {
    const ProblemInstance inst = encode_mis(paper_fig2_graph());
    const Dnf& d = std::get<Dnf>(inst.pfs.form());
    REQUIRE(d.cubes.size() == 5);
    CHECK(d.cubes[1] == Cube{{2, false}, {1, true}, {5, true}});
    CHECK(d.cubes[4] == Cube{{5, false}, {1, true}, {2, true}, {3, true}, {4, true}});

    const ProblemInstance isolated = encode_mis(Graph(1, {}));
    CHECK(std::get<Dnf>(isolated.pfs.form()).cubes == std::vector<Cube>{Cube{{1, false}}});
}

TEST_CASE("mis_oracle") {
    const Graph g = paper_fig2_graph();
    CHECK(mis_oracle(g, asg("01100")));
    CHECK_FALSE(mis_oracle(g, asg("11000")));
    CHECK(mis_oracle(g, asg("00000")));
    CHECK_THROWS_AS(mis_oracle(g, asg("0110")), std::invalid_argument);
}

TEST_CASE("mis_oracle agrees with an adjacency-matrix check on random graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + int(rng() % 6);
        const Graph g = pfs::testing::random_graph(rng, n);
        std::vector<std::vector<bool>> adj(std::size_t(n) + 1,
                                           std::vector<bool>(std::size_t(n) + 1, false));
        for (const auto& [u, v] : g.edges())
            adj[std::size_t(u)][std::size_t(v)] = adj[std::size_t(v)][std::size_t(u)] = true;
        for (std::uint32_t code = 0; code < (1u << n); ++code) {
            const Assignment a(n, code);
            bool independent = true;
            for (int u = 1; u <= n && independent; ++u)
                for (int v = u + 1; v <= n && independent; ++v)
                    if (adj[std::size_t(u)][std::size_t(v)] && a.bit(u) && a.bit(v))
                        independent = false;
            REQUIRE(mis_oracle(g, a) == independent);
        }
    }
}

TEST_CASE("triple_cubes on the worked graph") {
    const Dnf d = triple_cubes(paper_fig2_graph());
    const std::vector<Cube> expected{
        Cube{{1, false}, {6, false}, {7, false}},
        Cube{{4, false}, {5, false}, {6, false}},
        Cube{{2, false}, {3, false}, {5, false}},
        Cube{{2, false}, {3, false}, {7, false}},
        Cube{{2, false}, {5, false}, {7, false}},
        Cube{{3, false}, {5, false}, {7, false}},
    };
    CHECK(d.cubes == expected);
}

TEST_CASE("triple_cubes degenerate graphs") {
    // 4-cycle: all degrees 2.
    CHECK(triple_cubes(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})).cubes.empty());
    // Star with center degree 4.
    const Dnf star = triple_cubes(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
    CHECK(star.cubes.size() == 4);
}

TEST_CASE("triple_cubes count matches the binomial formula") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + int(rng() % 6);
        const Graph g = pfs::testing::random_graph(rng, n);
        std::uint64_t expected = 0;
        for (int v = 1; v <= n; ++v) expected += choose3(g.incident_edges(v).size());
        CHECK(triple_cubes(g).cubes.size() == expected);
    }
}

TEST_CASE("encode_hamiltonian") {
    const ProblemInstance inst = encode_hamiltonian(paper_fig2_graph());
    const Cnf& f = std::get<Cnf>(inst.pfs.form());
    REQUIRE(f.clauses.size() == 6);
    CHECK(f.clauses[0] == Clause{{1, true}, {6, true}, {7, true}});
    for (const Clause& cl : f.clauses) {
        CHECK(cl.literals().size() == 3);
        for (const Literal& l : cl.literals()) CHECK(l.negated);
    }
    // All four edges of vertex 5 selected: some triple fires.
    CHECK_FALSE(is_feasible(inst, asg("0110101")));

    const ProblemInstance triangle = encode_hamiltonian(Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(std::get<Cnf>(triangle.pfs.form()).clauses.empty());
    for (std::uint32_t code = 0; code < 8; ++code)
        CHECK(is_feasible(triangle, Assignment(3, code)));
}

TEST_CASE("hamiltonian_oracle") {
    const Graph g = paper_fig2_graph();
    CHECK(hamiltonian_oracle(g, asg("1111010")));
    CHECK_FALSE(hamiltonian_oracle(g, asg("0000000")));
    CHECK_FALSE(hamiltonian_oracle(g, asg("1111110"))); // vertex 4 gets degree 3
    CHECK_THROWS_AS(hamiltonian_oracle(g, asg("11110")), std::invalid_argument);

    // Two disjoint triangles: right degrees everywhere but disconnected.
    const Graph two(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK_FALSE(hamiltonian_oracle(two, asg("111111")));
}

TEST_CASE("hamiltonian feasibility is necessary for the oracle") {
    std::mt19937_64 rng(23);
    int graphs = 0;
    while (graphs < 25) {
        const int n = 3 + int(rng() % 4);
        const Graph g = pfs::testing::random_graph(rng, n);
        if (g.edge_count() < 1 || g.edge_count() > 16) continue;
        ++graphs;
        const ProblemInstance inst = encode_hamiltonian(g);
        for (std::uint32_t code = 0; code < (1u << g.edge_count()); ++code) {
            const Assignment a(g.edge_count(), code);
            if (hamiltonian_oracle(g, a)) REQUIRE(is_feasible(inst, a));
        }
    }
}

TEST_CASE("hamiltonian pointer equals the degree predicate exhaustively") {
    std::mt19937_64 rng(29);
    int graphs = 0;
    while (graphs < 25) {
        const int n = 3 + int(rng() % 4);
        const Graph g = pfs::testing::random_graph(rng, n);
        if (g.edge_count() < 1 || g.edge_count() > 16) continue;
        ++graphs;
        CHECK(divergence_report(encode_hamiltonian(g).pfs, OracleKind::HamiltonianDegree, g)
                  .empty());
    }
}

TEST_CASE("encode_sat") {
    const Cnf contradiction{{Clause{{1, false}}, Clause{{1, true}}}};
    const ProblemInstance inst = encode_sat(contradiction, 1);
    for (std::uint32_t code = 0; code < 2; ++code) {
        CHECK(is_feasible(inst, Assignment(1, code)));
        CHECK(evaluate_cost(inst, Assignment(1, code)) == 0);
    }
    CHECK_THROWS_AS(encode_sat(Cnf{{Clause{{3, false}}}}, 2), std::out_of_range);
}

TEST_CASE("mis divergence report") {
    const Graph tiny(3, {{1, 2}});
    const auto diff = divergence_report(encode_mis(tiny).pfs, OracleKind::Mis, tiny);
    REQUIRE(diff.size() == 2);
    CHECK(diff[0].str() == "000"); // empty set is independent but no cube fires
    CHECK(diff[1].str() == "111"); // isolated-vertex cube fires on a dependent set

    const Graph g = paper_fig2_graph();
    const auto fig2 = divergence_report(encode_mis(g).pfs, OracleKind::Mis, g);
    REQUIRE(!fig2.empty());
    CHECK(fig2.front().str() == "00000");
}
