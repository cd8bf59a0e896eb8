#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pfs/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

void print_result(const pfs::SolveResult& r, const std::string& solver, int n,
                  std::uint64_t seed, bool csv) {
    if (csv) {
        std::cout << pfs::kBenchCsvHeader << "\n" << pfs::bench_row_csv(n, seed, r);
        return;
    }
    std::cout << "solver " << solver << "\n";
    std::cout << "n " << n << "\n";
    if (r.best) {
        std::cout << "best_assignment " << r.best->assignment.str() << "\n";
        std::cout << "best_cost " << r.best->cost << "\n";
    } else {
        std::cout << "best_assignment -\n";
        std::cout << "best_cost -\n";
    }
    std::cout << "feasible_count " << r.feasible_count << "\n";
    std::cout << "pfs_evaluations " << r.pfs_evaluations << "\n";
    std::cout << "cost_evaluations " << r.cost_evaluations << "\n";
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms());
    std::cout << "elapsed_ms " << elapsed << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Combinatorial problems as (elements, feasibility pointer, cost):\n"
                 "encoders, exhaustive and pruned solvers, and verification oracles"};
    app.require_subcommand(1);

    std::string graph_path, cnf_path, instance_path, out_path, assignment_bits;
    std::string solver = "exhaustive", diverge_kind;
    int sat_n = 0, k = 1, k_min = 1, k_max = 1, seed_count = 1;
    std::uint64_t seed = 0;
    long long weight_lo = 1, weight_hi = 20;
    bool csv = false, use_formula_pfs = false;

    auto* encode_mis_cmd = app.add_subcommand("encode-mis", "Graph file to independent-set instance");
    encode_mis_cmd->add_option("graph", graph_path, "graph file")->required();
    encode_mis_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* encode_hc_cmd = app.add_subcommand("encode-hc", "Graph file to Hamiltonian-cycle instance");
    encode_hc_cmd->add_option("graph", graph_path, "graph file")->required();
    encode_hc_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* encode_sat_cmd = app.add_subcommand("encode-sat", "DIMACS CNF to satisfiability instance");
    encode_sat_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    encode_sat_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* ht_gen_cmd = app.add_subcommand("ht-gen", "Generate a seeded weighted-tuple instance");
    ht_gen_cmd->add_option("-k,--tetrads", k, "tetrad count (n = 4k)")->required();
    ht_gen_cmd->add_option("-s,--seed", seed, "generator seed")->required();
    ht_gen_cmd->add_option("--lo", weight_lo, "minimum weight (default 1)");
    ht_gen_cmd->add_option("--hi", weight_hi, "maximum weight (default 20)");
    ht_gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* ht_table_cmd = app.add_subcommand("ht-table", "Print the worked 16-row tetrad table");
    auto* ht_paper_cmd = app.add_subcommand("ht-paper", "Emit the worked 4-variable instance");
    ht_paper_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    ht_paper_cmd->add_flag("--formula-pfs", use_formula_pfs,
                           "use the closed-form pointer instead of the table");

    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("instance", instance_path, "instance file")->required();
    solve_cmd->add_option("--solver", solver, "exhaustive | bnb (default exhaustive)")
        ->check(CLI::IsMember({"exhaustive", "bnb"}));
    solve_cmd->add_flag("--csv", csv, "emit one CSV row instead of text");

    auto* verify_cmd = app.add_subcommand("verify", "Check one assignment against an instance");
    verify_cmd->add_option("instance", instance_path, "instance file")->required();
    verify_cmd->add_option("-a,--assignment", assignment_bits, "bit string, x1 first")->required();

    auto* diverge_cmd = app.add_subcommand(
        "diverge", "List assignments where the compiled pointer disagrees with the oracle");
    diverge_cmd->add_option("graph", graph_path, "graph file")->required();
    diverge_cmd->add_option("--kind", diverge_kind, "mis | hamiltonian-degree")
        ->required()
        ->check(CLI::IsMember({"mis", "hamiltonian-degree"}));

    auto* bench_cmd = app.add_subcommand("bench", "Seeded instance sweep, CSV on stdout");
    bench_cmd->add_option("--k-min", k_min, "smallest tetrad count (default 1)");
    bench_cmd->add_option("--k-max", k_max, "largest tetrad count (default 1)");
    bench_cmd->add_option("-s,--seed", seed, "first seed (default 0)");
    bench_cmd->add_option("--seeds", seed_count, "seeds per k (default 1)");
    bench_cmd->add_option("--lo", weight_lo, "minimum weight (default 1)");
    bench_cmd->add_option("--hi", weight_hi, "maximum weight (default 20)");

    CLI11_PARSE(app, argc, argv);

    if (encode_mis_cmd->parsed()) {
        emit(pfs::write_instance(pfs::make_mis_doc(pfs::read_graph(read_file(graph_path)))),
             out_path);
    } else if (encode_hc_cmd->parsed()) {
        emit(pfs::write_instance(
                 pfs::make_hamiltonian_doc(pfs::read_graph(read_file(graph_path)))),
             out_path);
    } else if (encode_sat_cmd->parsed()) {
        auto [formula, n] = pfs::read_cnf(read_file(cnf_path));
        emit(pfs::write_instance(pfs::make_sat_doc(formula, n)), out_path);
    } else if (ht_gen_cmd->parsed()) {
        const pfs::HeavyTupleInstance inst =
            pfs::generate_instance(k, seed, weight_lo, weight_hi);
        emit(pfs::write_instance(pfs::make_heavy_tuple_doc(inst, seed)), out_path);
    } else if (ht_table_cmd->parsed()) {
        std::cout << pfs::ht_table_text();
    } else if (ht_paper_cmd->parsed()) {
        pfs::HeavyTupleInstance inst = pfs::paper_instance();
        if (use_formula_pfs) inst.pfs = pfs::paper_pfs_formula();
        emit(pfs::write_instance(pfs::make_heavy_tuple_doc(inst)), out_path);
    } else if (solve_cmd->parsed()) {
        const pfs::InstanceDoc doc = pfs::read_instance(read_file(instance_path));
        pfs::SolveResult r;
        if (solver == "bnb") {
            if (doc.kind != "heavy-tuple")
                throw std::runtime_error(
                    "branch-and-bound needs a separable tetrad cost; kind '" + doc.kind +
                    "' is solved exhaustively (rerun with --solver exhaustive)");
            r = pfs::solve_branch_and_bound(pfs::doc_to_heavy_tuple(doc));
        } else {
            r = pfs::solve_exhaustive(pfs::doc_to_problem(doc));
        }
        print_result(r, solver, doc.n, doc.seed.value_or(0), csv);
    } else if (verify_cmd->parsed()) {
        const pfs::InstanceDoc doc = pfs::read_instance(read_file(instance_path));
        const pfs::Assignment asg = pfs::Assignment::from_string(assignment_bits);
        const pfs::ProblemInstance inst = pfs::doc_to_problem(doc);
        std::cout << "feasible " << (pfs::is_feasible(inst, asg) ? 1 : 0) << "\n";
        std::cout << "cost " << pfs::evaluate_cost(inst, asg) << "\n";
        if (doc.kind == "mis")
            std::cout << "oracle " << (pfs::mis_oracle(*doc.graph, asg) ? 1 : 0) << "\n";
        else if (doc.kind == "hamiltonian")
            std::cout << "oracle " << (pfs::hamiltonian_oracle(*doc.graph, asg) ? 1 : 0)
                      << "\n";
    } else if (diverge_cmd->parsed()) {
        const pfs::Graph g = pfs::read_graph(read_file(graph_path));
        const bool mis = diverge_kind == "mis";
        const pfs::BooleanFunction pointer =
            mis ? pfs::encode_mis(g).pfs : pfs::encode_hamiltonian(g).pfs;
        const auto kind = mis ? pfs::OracleKind::Mis : pfs::OracleKind::HamiltonianDegree;
        for (const pfs::Assignment& asg : pfs::divergence_report(pointer, kind, g))
            std::cout << asg.str() << "\n";
    } else if (bench_cmd->parsed()) {
        std::cout << pfs::bench_csv(k_min, k_max, seed, seed_count, weight_lo, weight_hi);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
