#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pfs/encoders.hpp"
#include "pfs/heavy_tuple.hpp"
#include "pfs/solve.hpp"

namespace pfs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Graph files: "p graph <n> <m>" followed by m lines "e <u> <v>". Edge labels
// are positional. Lines starting with 'c' are comments.

Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

// ---------------------------------------------------------------------------
// DIMACS CNF: "p cnf <n> <m>", clauses as nonzero integers terminated by 0.

std::pair<Cnf, int> read_cnf(std::string_view text);

// ---------------------------------------------------------------------------
// Instance documents (JSON). Kinds: mis, hamiltonian, sat, heavy-tuple.
// Pointer forms: dnf, cnf, table-hex, expr, const. Cost forms: popcount, cnf,
// oracle:hamiltonian, tetrad-rules. Unknown fields are rejected.

struct InstanceDoc {
    std::string kind;
    int n = 0;
    BooleanFunction pfs = BooleanFunction::constant(1, true);
    std::string cost_form;               // popcount | cnf | oracle:hamiltonian | tetrad-rules
    std::optional<Cnf> cost_cnf;         // cost_form == cnf
    std::optional<Graph> graph;          // kinds mis, hamiltonian
    std::vector<TetradWeightRule> rules; // kind heavy-tuple
    std::optional<std::uint64_t> seed;   // kind heavy-tuple, when generated

    bool operator==(const InstanceDoc&) const;
};

InstanceDoc read_instance(std::string_view text);
std::string write_instance(const InstanceDoc& doc);

InstanceDoc make_mis_doc(const Graph& g);
InstanceDoc make_hamiltonian_doc(const Graph& g);
InstanceDoc make_sat_doc(const Cnf& formula, int n);
InstanceDoc make_heavy_tuple_doc(const HeavyTupleInstance& inst,
                                 std::optional<std::uint64_t> seed = std::nullopt);

/// Rebuilds the solvable instance (reconstructing procedural costs from the
/// stored payload, e.g. the cycle oracle from the edge list).
ProblemInstance doc_to_problem(const InstanceDoc& doc);

/// Rebuilds the tetrad instance; requires kind heavy-tuple.
HeavyTupleInstance doc_to_heavy_tuple(const InstanceDoc& doc);

// Truth tables travel as hex strings of 2^n bits in assignment-code order
// (code 0 is the most significant bit of the first hex digit).
std::string table_to_hex(const TruthTable& t);
TruthTable table_from_hex(int n, std::string_view hex);

// ---------------------------------------------------------------------------
// Reports

/// The 16-row worked table: "<bits> <w1> <w2> <w3> <w4> <W> <f>" per row.
std::string ht_table_text();

inline constexpr std::string_view kBenchCsvHeader =
    "n,seed,feasible_count,pfs_evaluations,cost_evaluations,best_weight,elapsed_ms";

std::string bench_row_csv(int n, std::uint64_t seed, const SolveResult& r);

/// Exhaustively solves generated instances for every k in [k_min, k_max] and
/// every seed in [seed_start, seed_start + seed_count), one CSV row each.
std::string bench_csv(int k_min, int k_max, std::uint64_t seed_start, int seed_count,
                      long long lo, long long hi);

} // namespace pfs
