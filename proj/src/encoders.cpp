#include "pfs/encoders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pfs {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
        throw std::invalid_argument("graph must have at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
    }
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (int j = 0; j < edge_count(); ++j)
        if (edges_[std::size_t(j)].first == v || edges_[std::size_t(j)].second == v)
            out.push_back(j + 1);
    return out;
}

Graph paper_fig2_graph() {
    return Graph(5, {{1, 2}, {2, 5}, {3, 5}, {3, 4}, {4, 5}, {1, 4}, {1, 5}});
}

ProblemInstance encode_mis(const Graph& g) {
    Dnf d;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<Literal> lits{{v, false}};
        for (int u : g.neighbors(v)) lits.push_back({u, true});
        d.cubes.emplace_back(std::move(lits));
    }
    return ProblemInstance{ElementSet::numbered(g.vertex_count(), "v"),
                           BooleanFunction::dnf(g.vertex_count(), std::move(d)),
                           PopCountCost{}};
}

bool mis_oracle(const Graph& g, const Assignment& asg) {
    if (asg.size() != g.vertex_count())
        throw std::invalid_argument("assignment arity must equal vertex count");
    for (const auto& [u, v] : g.edges())
        if (asg.bit(u) && asg.bit(v)) return false;
    return true;
}

Dnf triple_cubes(const Graph& g) {
    Dnf d;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const std::vector<int> inc = g.incident_edges(v);
        const std::size_t deg = inc.size();
        if (deg < 3) continue;
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = i + 1; j < deg; ++j)
                for (std::size_t k = j + 1; k < deg; ++k)
                    d.cubes.push_back(Cube{{inc[i], false}, {inc[j], false}, {inc[k], false}});
    }
    // Different vertices can share a 3-subset of edges only in multigraphs,
    // which Graph forbids, but absorb also drops exact duplicates.
    return absorb(d);
}

ProblemInstance encode_hamiltonian(const Graph& g) {
    const int m = g.edge_count();
    if (m < 1)
        throw std::invalid_argument("hamiltonian encoding needs at least one edge");
    Cnf pfs = negate_dnf(triple_cubes(g));
    Graph copy = g;
    OracleCost cost{[copy](const Assignment& asg) -> long long {
        return hamiltonian_oracle(copy, asg) ? 1 : 0;
    }};
    return ProblemInstance{ElementSet::numbered(m, "e"),
                           BooleanFunction::cnf(m, std::move(pfs)), std::move(cost)};
}

bool hamiltonian_oracle(const Graph& g, const Assignment& asg) {
    if (asg.size() != g.edge_count())
        throw std::invalid_argument("assignment arity must equal edge count");
    const int n = g.vertex_count();
    if (asg.popcount() != n) return false;
    std::vector<std::vector<int>> adj(std::size_t(n) + 1);
    for (int j = 1; j <= g.edge_count(); ++j) {
        if (!asg.bit(j)) continue;
        const auto& [u, v] = g.edges()[std::size_t(j - 1)];
        adj[std::size_t(u)].push_back(v);
        adj[std::size_t(v)].push_back(u);
    }
    for (int v = 1; v <= n; ++v)
        if (adj[std::size_t(v)].size() != 2) return false;
    // Every vertex has degree 2 and there are n edges; a single connected
    // component is then exactly one simple cycle. Depth-first from vertex 1.
    std::vector<bool> visited(std::size_t(n) + 1, false);
    std::vector<int> stack{1};
    visited[1] = true;
    int reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int u : adj[std::size_t(v)]) {
            if (!visited[std::size_t(u)]) {
                visited[std::size_t(u)] = true;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

ProblemInstance encode_sat(const Cnf& formula, int n) {
    for (const Clause& cl : formula.clauses)
        for (const Literal& l : cl.literals())
            if (l.var > n)
                throw std::out_of_range("formula variable x" + std::to_string(l.var) +
                                        " exceeds n = " + std::to_string(n));
    return ProblemInstance{ElementSet::numbered(n, "x"),
                           BooleanFunction::constant(n, true), CnfCost{formula}};
}

std::vector<Assignment> divergence_report(const BooleanFunction& pfs,
                                          OracleKind kind, const Graph& g) {
    const int n = kind == OracleKind::Mis ? g.vertex_count() : g.edge_count();
    if (n > 20)
        throw std::length_error("divergence_report arity cap is 20");
    if (pfs.arity() != n)
        throw std::invalid_argument("PFS arity does not match the graph");
    std::vector<Assignment> out;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t code = 0; code < total; ++code) {
        Assignment asg(n, code);
        bool semantic;
        if (kind == OracleKind::Mis) {
            semantic = mis_oracle(g, asg);
        } else {
            semantic = true;
            for (int v = 1; v <= g.vertex_count() && semantic; ++v) {
                int selected = 0;
                for (int j : g.incident_edges(v)) selected += asg.bit(j);
                semantic = selected <= 2;
            }
        }
        if (pfs.eval(asg) != semantic) out.push_back(asg);
    }
    return out;
}

} // namespace pfs
