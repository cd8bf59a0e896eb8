#pragma once

#include <utility>
#include <vector>

#include "pfs/problem.hpp"

namespace pfs {

/// Simple undirected graph. Edges are labeled e_1 ... e_m by list position.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbors of vertex v, ascending.
    std::vector<int> neighbors(int v) const;
    /// 1-based labels of edges incident to v, ascending.
    std::vector<int> incident_edges(int v) const;

    bool operator==(const Graph&) const = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// The worked 5-vertex, 7-edge example graph.
Graph paper_fig2_graph();

/// Maximum-independent-set encoding: one cube per vertex (the vertex's
/// positive literal plus its neighbors negated), popcount cost.
ProblemInstance encode_mis(const Graph& g);

/// True iff no edge has both endpoints selected.
bool mis_oracle(const Graph& g, const Assignment& asg);

/// For each vertex of degree >= 3, one positive 3-literal cube per 3-subset
/// of its incident edges; vertex-ascending, subsets in lexicographic edge
/// order, absorbed. True exactly when some vertex has 3 selected incident
/// edges.
Dnf triple_cubes(const Graph& g);

/// Hamiltonian-cycle encoding over edge variables: PFS is the De Morgan
/// negation of triple_cubes, cost is 1 iff the selection is a Hamiltonian
/// cycle.
ProblemInstance encode_hamiltonian(const Graph& g);

/// True iff the selected edges form one simple cycle through every vertex.
bool hamiltonian_oracle(const Graph& g, const Assignment& asg);

/// Satisfiability as a problem instance: constant-true PFS, 0/1 formula cost.
ProblemInstance encode_sat(const Cnf& formula, int n);

enum class OracleKind {
    Mis,               // pairwise non-adjacency
    HamiltonianDegree, // every vertex has at most 2 selected incident edges
};

/// All assignments (ascending) where the compiled PFS disagrees with the
/// semantic predicate.
std::vector<Assignment> divergence_report(const BooleanFunction& pfs,
                                          OracleKind kind, const Graph& g);

} // namespace pfs
