#include "pfs/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace pfs {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    throw ParseError(path + ": " + msg);
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

bool is_blank_or_comment(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == 'c';
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// Graph files

Graph read_graph(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t header_line = 0;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineno = int(i) + 1;
        const std::string& line = lines[i];
        if (is_blank_or_comment(line)) continue;
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (n < 0) {
            std::string format;
            if (tag != "p" || !(in >> format >> n >> m) || format != "graph")
                parse_fail(lineno, "expected header 'p graph <n> <m>'");
            if (n < 1) parse_fail(lineno, "vertex count must be >= 1");
            if (m < 0) parse_fail(lineno, "edge count must be >= 0");
            header_line = std::size_t(lineno);
            continue;
        }
        if (tag != "e") parse_fail(lineno, "expected edge line 'e <u> <v>'");
        int u = 0, v = 0;
        if (!(in >> u >> v)) parse_fail(lineno, "malformed edge line");
        std::string extra;
        if (in >> extra) parse_fail(lineno, "trailing content on edge line");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(lineno, "vertex out of range [1, " + std::to_string(n) + "]");
        if (u == v) parse_fail(lineno, "self-loop on vertex " + std::to_string(u));
        for (const auto& [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                parse_fail(lineno, "duplicate edge (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ")");
        edges.emplace_back(u, v);
    }
    if (n < 0) parse_fail(1, "missing header 'p graph <n> <m>'");
    if (int(edges.size()) != m)
        parse_fail(int(header_line), "header declares " + std::to_string(m) +
                                         " edges, found " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::string out = "p graph " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// DIMACS CNF

std::pair<Cnf, int> read_cnf(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);
    int n = -1, m = -1;
    Cnf cnf;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineno = int(i) + 1;
        const std::string& line = lines[i];
        if (is_blank_or_comment(line)) continue;
        std::istringstream in(line);
        if (n < 0) {
            std::string tag, format;
            if (!(in >> tag >> format >> n >> m) || tag != "p" || format != "cnf")
                parse_fail(lineno, "expected header 'p cnf <n> <m>'");
            if (n < 0 || m < 0) parse_fail(lineno, "negative count in header");
            continue;
        }
        std::vector<Literal> lits;
        long lit = 0;
        bool terminated = false;
        while (in >> lit) {
            if (lit == 0) {
                terminated = true;
                std::string extra;
                if (in >> extra) parse_fail(lineno, "content after clause terminator");
                break;
            }
            const long var = lit < 0 ? -lit : lit;
            if (var > n)
                parse_fail(lineno, "literal " + std::to_string(lit) +
                                       " out of range for n = " + std::to_string(n));
            lits.push_back({int(var), lit < 0});
        }
        if (!terminated) parse_fail(lineno, "clause missing 0 terminator");
        cnf.clauses.emplace_back(std::move(lits));
    }
    if (n < 0) parse_fail(1, "missing header 'p cnf <n> <m>'");
    if (int(cnf.clauses.size()) != m)
        parse_fail(1, "header declares " + std::to_string(m) + " clauses, found " +
                          std::to_string(cnf.clauses.size()));
    return {std::move(cnf), n};
}

// ---------------------------------------------------------------------------
// Truth table hex

std::string table_to_hex(const TruthTable& t) {
    const std::size_t bits = t.values.size();
    std::string out;
    for (std::size_t i = 0; i < bits; i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits && t.values[i + j]) nibble |= 1u;
        }
        out += "0123456789abcdef"[nibble];
    }
    return out;
}

TruthTable table_from_hex(int n, std::string_view hex) {
    if (n < 1 || n > kEnumCap)
        throw ParseError("table arity out of range");
    const std::size_t bits = std::size_t{1} << n;
    const std::size_t digits = (bits + 3) / 4;
    if (hex.size() != digits)
        throw ParseError("table hex must have " + std::to_string(digits) +
                         " digits for n = " + std::to_string(n));
    std::vector<bool> values;
    values.reserve(bits);
    for (std::size_t i = 0; i < digits; ++i) {
        const char c = hex[i];
        unsigned nibble;
        if (c >= '0' && c <= '9') nibble = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') nibble = unsigned(c - 'a') + 10;
        else throw ParseError(std::string("bad hex digit '") + c + "'");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool bit = (nibble >> (3 - j)) & 1u;
            if (i * 4 + j < bits) values.push_back(bit);
            else if (bit) throw ParseError("nonzero padding bits in table hex");
        }
    }
    return make_truth_table(n, std::move(values));
}

// ---------------------------------------------------------------------------
// Instance documents

namespace {

Json literals_to_json(const std::vector<Literal>& lits) {
    Json arr = Json::array();
    for (const Literal& l : lits) arr.push_back(l.negated ? -l.var : l.var);
    return arr;
}

std::vector<Literal> literals_from_json(const Json& arr, const std::string& path) {
    if (!arr.is_array()) schema_fail(path, "expected an array of nonzero integers");
    std::vector<Literal> lits;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) schema_fail(path, "literal must be an integer");
        const long long lit = v.get<long long>();
        if (lit == 0) schema_fail(path, "literal must be nonzero");
        lits.push_back({int(lit < 0 ? -lit : lit), lit < 0});
    }
    return lits;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) schema_fail(path + "." + key, "unknown field");
    }
}

Json pfs_to_json(const BooleanFunction& fn) {
    Json obj;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, BooleanFunction::Const>) {
                obj["form"] = "const";
                obj["value"] = f.value;
            } else if constexpr (std::is_same_v<T, Dnf>) {
                obj["form"] = "dnf";
                Json cubes = Json::array();
                for (const Cube& c : f.cubes) cubes.push_back(literals_to_json(c.literals()));
                obj["cubes"] = std::move(cubes);
            } else if constexpr (std::is_same_v<T, Cnf>) {
                obj["form"] = "cnf";
                Json clauses = Json::array();
                for (const Clause& c : f.clauses)
                    clauses.push_back(literals_to_json(c.literals()));
                obj["clauses"] = std::move(clauses);
            } else if constexpr (std::is_same_v<T, TruthTable>) {
                obj["form"] = "table-hex";
                obj["bits"] = table_to_hex(f);
            } else {
                obj["form"] = "expr";
                obj["text"] = expr_to_string(*f);
            }
        },
        fn.form());
    return obj;
}

BooleanFunction pfs_from_json(const Json& obj, int n, const std::string& path) {
    if (!obj.is_object() || !obj.contains("form") || !obj["form"].is_string())
        schema_fail(path, "expected an object with a 'form' field");
    const std::string form = obj["form"].get<std::string>();
    try {
        if (form == "const") {
            check_keys(obj, {"form", "value"}, path);
            if (!obj.contains("value") || !obj["value"].is_boolean())
                schema_fail(path + ".value", "expected a boolean");
            return BooleanFunction::constant(n, obj["value"].get<bool>());
        }
        if (form == "dnf") {
            check_keys(obj, {"form", "cubes"}, path);
            if (!obj.contains("cubes") || !obj["cubes"].is_array())
                schema_fail(path + ".cubes", "expected an array");
            Dnf d;
            for (const auto& cube : obj["cubes"])
                d.cubes.emplace_back(literals_from_json(cube, path + ".cubes"));
            return BooleanFunction::dnf(n, std::move(d));
        }
        if (form == "cnf") {
            check_keys(obj, {"form", "clauses"}, path);
            if (!obj.contains("clauses") || !obj["clauses"].is_array())
                schema_fail(path + ".clauses", "expected an array");
            Cnf c;
            for (const auto& clause : obj["clauses"])
                c.clauses.emplace_back(literals_from_json(clause, path + ".clauses"));
            return BooleanFunction::cnf(n, std::move(c));
        }
        if (form == "table-hex") {
            check_keys(obj, {"form", "bits"}, path);
            if (!obj.contains("bits") || !obj["bits"].is_string())
                schema_fail(path + ".bits", "expected a hex string");
            return BooleanFunction::table(table_from_hex(n, obj["bits"].get<std::string>()));
        }
        if (form == "expr") {
            check_keys(obj, {"form", "text"}, path);
            if (!obj.contains("text") || !obj["text"].is_string())
                schema_fail(path + ".text", "expected an expression string");
            return BooleanFunction::expr(n, parse_expr(obj["text"].get<std::string>()));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path + ".form", "unknown pointer form '" + form + "'");
}

Json rules_to_json(const std::vector<TetradWeightRule>& rules) {
    Json arr = Json::array();
    for (const TetradWeightRule& r : rules) {
        Json row = Json::array();
        for (long long w : r.w1) row.push_back(w);
        for (long long w : r.w2) row.push_back(w);
        for (long long w : r.w3) row.push_back(w);
        for (long long w : r.w4) row.push_back(w);
        arr.push_back(std::move(row));
    }
    return arr;
}

std::vector<TetradWeightRule> rules_from_json(const Json& arr, const std::string& path) {
    if (!arr.is_array() || arr.empty()) schema_fail(path, "expected a nonempty array of rules");
    std::vector<TetradWeightRule> rules;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 12)
            schema_fail(path, "each rule must list exactly 12 integer weights");
        std::vector<long long> w;
        for (const auto& v : row) {
            if (!v.is_number_integer()) schema_fail(path, "weights must be integers");
            w.push_back(v.get<long long>());
        }
        TetradWeightRule r;
        r.w1 = {w[0], w[1]};
        r.w2 = {w[2], w[3], w[4], w[5]};
        r.w3 = {w[6], w[7]};
        r.w4 = {w[8], w[9], w[10], w[11]};
        rules.push_back(r);
    }
    return rules;
}

} // namespace

bool InstanceDoc::operator==(const InstanceDoc& other) const {
    return kind == other.kind && n == other.n && pfs == other.pfs &&
           cost_form == other.cost_form && cost_cnf == other.cost_cnf &&
           graph == other.graph && rules == other.rules && seed == other.seed;
}

std::string write_instance(const InstanceDoc& doc) {
    Json obj;
    obj["kind"] = doc.kind;
    obj["n"] = doc.n;
    obj["pfs"] = pfs_to_json(doc.pfs);
    Json cost;
    cost["form"] = doc.cost_form;
    if (doc.cost_cnf) {
        Json clauses = Json::array();
        for (const Clause& c : doc.cost_cnf->clauses)
            clauses.push_back(literals_to_json(c.literals()));
        cost["clauses"] = std::move(clauses);
    }
    obj["cost"] = std::move(cost);
    if (doc.graph) {
        if (doc.kind == "hamiltonian") obj["vertices"] = doc.graph->vertex_count();
        Json edges = Json::array();
        for (const auto& [u, v] : doc.graph->edges()) edges.push_back(Json::array({u, v}));
        obj["edges"] = std::move(edges);
    }
    if (!doc.rules.empty()) obj["rules"] = rules_to_json(doc.rules);
    if (doc.seed) obj["seed"] = *doc.seed;
    return obj.dump(2) + "\n";
}

InstanceDoc read_instance(std::string_view text) {
    Json obj;
    try {
        obj = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) schema_fail("$", "instance document must be an object");
    check_keys(obj, {"kind", "n", "pfs", "cost", "vertices", "edges", "rules", "seed"}, "$");
    for (const char* required : {"kind", "n", "pfs", "cost"})
        if (!obj.contains(required))
            schema_fail(std::string("$.") + required, "missing required field");

    if (!obj["kind"].is_string()) schema_fail("$.kind", "expected a string");
    const std::string kind = obj["kind"].get<std::string>();
    if (kind != "mis" && kind != "hamiltonian" && kind != "sat" && kind != "heavy-tuple")
        schema_fail("$.kind", "unknown kind '" + kind + "'");

    if (!obj["n"].is_number_integer()) schema_fail("$.n", "expected an integer");
    const int n = obj["n"].get<int>();
    if (n < 1 || n > 32) schema_fail("$.n", "n must be in [1, 32]");

    const bool graph_kind = kind == "mis" || kind == "hamiltonian";
    if (obj.contains("edges") && !graph_kind)
        schema_fail("$.edges", "field only valid for graph kinds");
    if (obj.contains("vertices") && kind != "hamiltonian")
        schema_fail("$.vertices", "field only valid for kind hamiltonian");
    if (obj.contains("rules") && kind != "heavy-tuple")
        schema_fail("$.rules", "field only valid for kind heavy-tuple");
    if (obj.contains("seed") && kind != "heavy-tuple")
        schema_fail("$.seed", "field only valid for kind heavy-tuple");

    InstanceDoc doc;
    doc.kind = kind;
    doc.n = n;
    doc.pfs = pfs_from_json(obj["pfs"], n, "$.pfs");

    const Json& cost = obj["cost"];
    if (!cost.is_object() || !cost.contains("form") || !cost["form"].is_string())
        schema_fail("$.cost", "expected an object with a 'form' field");
    doc.cost_form = cost["form"].get<std::string>();
    if (doc.cost_form == "cnf") {
        check_keys(cost, {"form", "clauses"}, "$.cost");
        if (!cost.contains("clauses") || !cost["clauses"].is_array())
            schema_fail("$.cost.clauses", "expected an array");
        Cnf formula;
        for (const auto& clause : cost["clauses"]) {
            std::vector<Literal> lits = literals_from_json(clause, "$.cost.clauses");
            for (const Literal& l : lits)
                if (l.var > n) schema_fail("$.cost.clauses", "literal out of range");
            formula.clauses.emplace_back(std::move(lits));
        }
        doc.cost_cnf = std::move(formula);
    } else if (doc.cost_form == "popcount" || doc.cost_form == "oracle:hamiltonian" ||
               doc.cost_form == "tetrad-rules") {
        check_keys(cost, {"form"}, "$.cost");
    } else {
        schema_fail("$.cost.form", "unknown cost form '" + doc.cost_form + "'");
    }

    if (graph_kind) {
        if (!obj.contains("edges")) schema_fail("$.edges", "missing required field");
        if (!obj["edges"].is_array()) schema_fail("$.edges", "expected an array");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : obj["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                schema_fail("$.edges", "each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        int vertices = n;
        if (kind == "hamiltonian") {
            if (!obj.contains("vertices")) schema_fail("$.vertices", "missing required field");
            if (!obj["vertices"].is_number_integer())
                schema_fail("$.vertices", "expected an integer");
            vertices = obj["vertices"].get<int>();
            if (int(edges.size()) != n)
                schema_fail("$.edges", "edge count must equal n for kind hamiltonian");
        }
        try {
            doc.graph = Graph(vertices, std::move(edges));
        } catch (const std::exception& e) {
            schema_fail("$.edges", e.what());
        }
    }

    if (kind == "heavy-tuple") {
        if (!obj.contains("rules")) schema_fail("$.rules", "missing required field");
        doc.rules = rules_from_json(obj["rules"], "$.rules");
        if (int(doc.rules.size()) * 4 != n)
            schema_fail("$.rules", "rule count must be n/4");
        if (obj.contains("seed")) {
            if (!obj["seed"].is_number_unsigned() && !obj["seed"].is_number_integer())
                schema_fail("$.seed", "expected an integer");
            doc.seed = obj["seed"].get<std::uint64_t>();
        }
    }
    return doc;
}

InstanceDoc make_mis_doc(const Graph& g) {
    InstanceDoc doc;
    doc.kind = "mis";
    doc.n = g.vertex_count();
    doc.pfs = encode_mis(g).pfs;
    doc.cost_form = "popcount";
    doc.graph = g;
    return doc;
}

InstanceDoc make_hamiltonian_doc(const Graph& g) {
    InstanceDoc doc;
    doc.kind = "hamiltonian";
    doc.n = g.edge_count();
    doc.pfs = encode_hamiltonian(g).pfs;
    doc.cost_form = "oracle:hamiltonian";
    doc.graph = g;
    return doc;
}

InstanceDoc make_sat_doc(const Cnf& formula, int n) {
    InstanceDoc doc;
    doc.kind = "sat";
    doc.n = n;
    doc.pfs = encode_sat(formula, n).pfs;
    doc.cost_form = "cnf";
    doc.cost_cnf = formula;
    return doc;
}

InstanceDoc make_heavy_tuple_doc(const HeavyTupleInstance& inst,
                                 std::optional<std::uint64_t> seed) {
    InstanceDoc doc;
    doc.kind = "heavy-tuple";
    doc.n = inst.arity();
    doc.pfs = inst.pfs;
    doc.cost_form = "tetrad-rules";
    doc.rules = inst.rules;
    doc.seed = seed;
    return doc;
}

ProblemInstance doc_to_problem(const InstanceDoc& doc) {
    CostFunction cost = PopCountCost{};
    if (doc.cost_form == "popcount") {
        cost = PopCountCost{};
    } else if (doc.cost_form == "cnf") {
        if (!doc.cost_cnf) throw ParseError("cnf cost without a formula");
        cost = CnfCost{*doc.cost_cnf};
    } else if (doc.cost_form == "oracle:hamiltonian") {
        if (!doc.graph) throw ParseError("hamiltonian cost without an edge list");
        Graph g = *doc.graph;
        cost = OracleCost{[g](const Assignment& asg) -> long long {
            return hamiltonian_oracle(g, asg) ? 1 : 0;
        }};
    } else if (doc.cost_form == "tetrad-rules") {
        cost = TetradCost{doc.rules};
    } else {
        throw ParseError("unknown cost form '" + doc.cost_form + "'");
    }
    const std::string prefix = doc.kind == "mis"          ? "v"
                               : doc.kind == "hamiltonian" ? "e"
                                                           : "x";
    return ProblemInstance{ElementSet::numbered(doc.n, prefix), doc.pfs, std::move(cost)};
}

HeavyTupleInstance doc_to_heavy_tuple(const InstanceDoc& doc) {
    if (doc.kind != "heavy-tuple")
        throw ParseError("instance kind '" + doc.kind + "' is not heavy-tuple");
    return make_heavy_tuple(doc.rules, doc.pfs);
}

// ---------------------------------------------------------------------------
// Reports

std::string ht_table_text() {
    const TetradWeightRule rule = paper_rule();
    const BooleanFunction pointer = paper_pfs_table();
    std::string out;
    for (unsigned bits = 0; bits < 16; ++bits) {
        const unsigned x1 = (bits >> 3) & 1u, x2 = (bits >> 2) & 1u;
        const unsigned x3 = (bits >> 1) & 1u, x4 = bits & 1u;
        const long long w1 = rule.w1[x1];
        const long long w2 = rule.w2[2 * x1 + x2];
        const long long w3 = rule.w3[x3];
        const long long w4 = rule.w4[2 * x3 + x4];
        const Assignment asg(4, bits);
        out += asg.str() + " " + std::to_string(w1) + " " + std::to_string(w2) + " " +
               std::to_string(w3) + " " + std::to_string(w4) + " " +
               std::to_string(w1 + w2 + w3 + w4) + " " +
               (pointer.eval(asg) ? "1" : "0") + "\n";
    }
    return out;
}

std::string bench_row_csv(int n, std::uint64_t seed, const SolveResult& r) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms());
    return std::to_string(n) + "," + std::to_string(seed) + "," +
           std::to_string(r.feasible_count) + "," + std::to_string(r.pfs_evaluations) +
           "," + std::to_string(r.cost_evaluations) + "," +
           std::to_string(r.best ? r.best->cost : 0) + "," + elapsed + "\n";
}

std::string bench_csv(int k_min, int k_max, std::uint64_t seed_start, int seed_count,
                      long long lo, long long hi) {
    if (k_min < 1 || k_max < k_min) throw std::domain_error("bad k range");
    if (seed_count < 1) throw std::domain_error("seed count must be >= 1");
    std::string out = std::string(kBenchCsvHeader) + "\n";
    for (int k = k_min; k <= k_max; ++k) {
        for (int s = 0; s < seed_count; ++s) {
            const std::uint64_t seed = seed_start + std::uint64_t(s);
            const HeavyTupleInstance inst = generate_instance(k, seed, lo, hi);
            const SolveResult r = solve_exhaustive(to_problem(inst));
            out += bench_row_csv(inst.arity(), seed, r);
        }
    }
    return out;
}

} // namespace pfs
