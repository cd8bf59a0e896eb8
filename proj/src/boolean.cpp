#include "pfs/boolean.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pfs {

namespace {

void check_enum_cap(int n) {
    if (n < 0 || n > kEnumCap)
        throw std::length_error("variable count " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(kEnumCap));
}

std::vector<Literal> canonicalize(std::vector<Literal> lits, const char* what) {
    std::sort(lits.begin(), lits.end());
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (lits[i].var < 1)
            throw std::invalid_argument(std::string(what) + ": variable index must be >= 1");
        if (i > 0 && lits[i].var == lits[i - 1].var)
            throw std::invalid_argument(std::string(what) + ": variable x" +
                                        std::to_string(lits[i].var) + " occurs twice");
    }
    return lits;
}

bool literal_value(const Literal& l, const Assignment& asg) {
    return asg.bit(l.var) != l.negated;
}

} // namespace

Assignment::Assignment(int n, std::uint32_t code) : n_(n), code_(code) {
    if (n < 1 || n > 32)
        throw std::invalid_argument("assignment length must be in [1, 32]");
    if (n < 32 && code >= (std::uint32_t{1} << n))
        throw std::invalid_argument("assignment code out of range for length " + std::to_string(n));
}

Assignment Assignment::from_string(std::string_view bits) {
    if (bits.empty() || bits.size() > 32)
        throw std::invalid_argument("assignment string length must be in [1, 32]");
    std::uint32_t code = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("assignment string may contain only 0 and 1");
        code = (code << 1) | std::uint32_t(c - '0');
    }
    return Assignment(int(bits.size()), code);
}

bool Assignment::bit(int var) const {
    if (var < 1 || var > n_)
        throw std::out_of_range("variable x" + std::to_string(var) +
                                " out of range for arity " + std::to_string(n_));
    return (code_ >> (n_ - var)) & 1u;
}

int Assignment::popcount() const { return std::popcount(code_); }

std::string Assignment::str() const {
    std::string s(std::size_t(n_), '0');
    for (int i = 0; i < n_; ++i)
        if ((code_ >> (n_ - 1 - i)) & 1u) s[std::size_t(i)] = '1';
    return s;
}

Cube::Cube(std::vector<Literal> lits) : lits_(canonicalize(std::move(lits), "cube")) {}
Cube::Cube(std::initializer_list<Literal> lits) : Cube(std::vector<Literal>(lits)) {}

bool Cube::eval(const Assignment& asg) const {
    for (const Literal& l : lits_)
        if (!literal_value(l, asg)) return false;
    return true;
}

bool Cube::contains(const Cube& other) const {
    return std::includes(lits_.begin(), lits_.end(),
                         other.lits_.begin(), other.lits_.end());
}

bool Dnf::eval(const Assignment& asg) const {
    for (const Cube& c : cubes)
        if (c.eval(asg)) return true;
    return false;
}

Clause::Clause(std::vector<Literal> lits) : lits_(canonicalize(std::move(lits), "clause")) {}
Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

bool Clause::eval(const Assignment& asg) const {
    for (const Literal& l : lits_)
        if (literal_value(l, asg)) return true;
    return false;
}

bool Cnf::eval(const Assignment& asg) const {
    for (const Clause& c : clauses)
        if (!c.eval(asg)) return false;
    return true;
}

TruthTable make_truth_table(int n, std::vector<bool> values) {
    check_enum_cap(n);
    if (values.size() != (std::size_t{1} << n))
        throw std::invalid_argument("truth table must have 2^n entries");
    return TruthTable{n, std::move(values)};
}

// ---------------------------------------------------------------------------
// Expression trees

ExprPtr expr_var(int var) {
    if (var < 1) throw std::invalid_argument("variable index must be >= 1");
    return std::make_shared<Expr>(Expr{Expr::Kind::Var, var, nullptr, nullptr});
}
ExprPtr expr_not(ExprPtr a) {
    return std::make_shared<Expr>(Expr{Expr::Kind::Not, 0, std::move(a), nullptr});
}
ExprPtr expr_and(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Expr::Kind::And, 0, std::move(a), std::move(b)});
}
ExprPtr expr_or(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Expr::Kind::Or, 0, std::move(a), std::move(b)});
}
ExprPtr expr_xor(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Expr::Kind::Xor, 0, std::move(a), std::move(b)});
}

bool eval_expr(const Expr& e, const Assignment& asg) {
    switch (e.kind) {
    case Expr::Kind::Var: return asg.bit(e.var);
    case Expr::Kind::Not: return !eval_expr(*e.a, asg);
    case Expr::Kind::And: return eval_expr(*e.a, asg) && eval_expr(*e.b, asg);
    case Expr::Kind::Or:  return eval_expr(*e.a, asg) || eval_expr(*e.b, asg);
    case Expr::Kind::Xor: return eval_expr(*e.a, asg) != eval_expr(*e.b, asg);
    }
    throw std::logic_error("unreachable expression kind");
}

std::size_t expr_size(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Var: return 1;
    case Expr::Kind::Not: return 1 + expr_size(*e.a);
    default: return 1 + expr_size(*e.a) + expr_size(*e.b);
    }
}

int expr_max_var(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Var: return e.var;
    case Expr::Kind::Not: return expr_max_var(*e.a);
    default: return std::max(expr_max_var(*e.a), expr_max_var(*e.b));
    }
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Expr::Kind::Var: return a.var == b.var;
    case Expr::Kind::Not: return expr_equal(*a.a, *b.a);
    default: return expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
    }
}

std::string expr_to_string(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Var: return "x" + std::to_string(e.var);
    case Expr::Kind::Not: return "(not " + expr_to_string(*e.a) + ")";
    case Expr::Kind::And: return "(and " + expr_to_string(*e.a) + " " + expr_to_string(*e.b) + ")";
    case Expr::Kind::Or:  return "(or " + expr_to_string(*e.a) + " " + expr_to_string(*e.b) + ")";
    case Expr::Kind::Xor: return "(xor " + expr_to_string(*e.a) + " " + expr_to_string(*e.b) + ")";
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression parse error at offset " +
                                    std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == start) fail("expected token");
        return std::string(text.substr(start, pos - start));
    }

    ExprPtr parse() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] != '(') {
            std::string t = token();
            if (t.size() < 2 || t[0] != 'x') fail("expected variable like x3, got '" + t + "'");
            int var = 0;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(t[i])))
                    fail("bad variable '" + t + "'");
                var = var * 10 + (t[i] - '0');
            }
            if (var < 1) fail("variable index must be >= 1");
            return expr_var(var);
        }
        ++pos; // '('
        std::string op = token();
        ExprPtr result;
        if (op == "not") {
            result = expr_not(parse());
        } else if (op == "and" || op == "or" || op == "xor") {
            ExprPtr a = parse();
            ExprPtr b = parse();
            result = op == "and" ? expr_and(a, b) : op == "or" ? expr_or(a, b) : expr_xor(a, b);
        } else {
            fail("unknown operator '" + op + "'");
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        return result;
    }
};

} // namespace

ExprPtr parse_expr(std::string_view text) {
    ExprParser p{text};
    ExprPtr e = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

// ---------------------------------------------------------------------------
// BooleanFunction

BooleanFunction BooleanFunction::constant(int n, bool value) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    return BooleanFunction(n, Const{value});
}

BooleanFunction BooleanFunction::dnf(int n, Dnf d) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    for (const Cube& c : d.cubes)
        for (const Literal& l : c.literals())
            if (l.var > n)
                throw std::out_of_range("cube variable x" + std::to_string(l.var) +
                                        " exceeds arity " + std::to_string(n));
    return BooleanFunction(n, std::move(d));
}

BooleanFunction BooleanFunction::cnf(int n, Cnf c) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    for (const Clause& cl : c.clauses)
        for (const Literal& l : cl.literals())
            if (l.var > n)
                throw std::out_of_range("clause variable x" + std::to_string(l.var) +
                                        " exceeds arity " + std::to_string(n));
    return BooleanFunction(n, std::move(c));
}

BooleanFunction BooleanFunction::table(TruthTable t) {
    if (t.n < 1 || t.values.size() != (std::size_t{1} << t.n))
        throw std::invalid_argument("malformed truth table");
    int n = t.n;
    return BooleanFunction(n, std::move(t));
}

BooleanFunction BooleanFunction::expr(int n, ExprPtr e) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    if (!e) throw std::invalid_argument("null expression");
    if (expr_max_var(*e) > n)
        throw std::out_of_range("expression variable exceeds arity " + std::to_string(n));
    if (expr_size(*e) > kMaxExprNodesPerVar * std::size_t(n))
        throw std::invalid_argument("expression exceeds node budget for arity " +
                                    std::to_string(n));
    return BooleanFunction(n, std::move(e));
}

bool BooleanFunction::eval(const Assignment& asg) const {
    if (asg.size() != arity_)
        throw std::invalid_argument("arity mismatch: function expects " +
                                    std::to_string(arity_) + ", assignment has " +
                                    std::to_string(asg.size()));
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Const>) return f.value;
            else if constexpr (std::is_same_v<T, Dnf>) return f.eval(asg);
            else if constexpr (std::is_same_v<T, Cnf>) return f.eval(asg);
            else if constexpr (std::is_same_v<T, TruthTable>) return f.values[asg.code()];
            else return eval_expr(*f, asg);
        },
        form_);
}

bool BooleanFunction::operator==(const BooleanFunction& other) const {
    if (arity_ != other.arity_ || form_.index() != other.form_.index()) return false;
    if (std::holds_alternative<ExprPtr>(form_))
        return expr_equal(*std::get<ExprPtr>(form_), *std::get<ExprPtr>(other.form_));
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ExprPtr>) return false; // handled above
            else return f == std::get<T>(other.form_);
        },
        form_);
}

// ---------------------------------------------------------------------------
// Operations

Cnf negate_dnf(const Dnf& d) {
    Cnf out;
    out.clauses.reserve(d.cubes.size());
    for (const Cube& c : d.cubes) {
        std::vector<Literal> lits;
        lits.reserve(c.literals().size());
        for (const Literal& l : c.literals()) lits.push_back({l.var, !l.negated});
        out.clauses.emplace_back(std::move(lits));
    }
    return out;
}

Dnf absorb(const Dnf& d) {
    Dnf out;
    for (std::size_t i = 0; i < d.cubes.size(); ++i) {
        const Cube& ci = d.cubes[i];
        bool keep = true;
        for (std::size_t j = 0; j < d.cubes.size(); ++j) {
            if (i == j) continue;
            const Cube& cj = d.cubes[j];
            if (ci == cj) {
                if (j < i) { keep = false; break; } // duplicate: first occurrence wins
            } else if (ci.contains(cj)) {
                keep = false;
                break;
            }
        }
        if (keep) out.cubes.push_back(ci);
    }
    return out;
}

std::uint64_t count_satisfying(const BooleanFunction& fn, int n) {
    check_enum_cap(n);
    if (fn.arity() != n)
        throw std::invalid_argument("arity mismatch in count_satisfying");
    std::uint64_t count = 0;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t code = 0; code < total; ++code)
        if (fn.eval(Assignment(n, code))) ++count;
    return count;
}

bool is_balanced(const BooleanFunction& fn, int n) {
    return count_satisfying(fn, n) == (std::uint64_t{1} << (n - 1));
}

std::vector<Assignment> equivalence_diff(const BooleanFunction& a,
                                         const BooleanFunction& b, int n) {
    check_enum_cap(n);
    if (a.arity() != n || b.arity() != n)
        throw std::invalid_argument("arity mismatch in equivalence_diff");
    std::vector<Assignment> diff;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t code = 0; code < total; ++code) {
        Assignment asg(n, code);
        if (a.eval(asg) != b.eval(asg)) diff.push_back(asg);
    }
    return diff;
}

TruthTable to_truth_table(const BooleanFunction& fn, int n) {
    check_enum_cap(n);
    if (fn.arity() != n)
        throw std::invalid_argument("arity mismatch in to_truth_table");
    std::vector<bool> values;
    const std::uint32_t total = std::uint32_t{1} << n;
    values.reserve(total);
    for (std::uint32_t code = 0; code < total; ++code)
        values.push_back(fn.eval(Assignment(n, code)));
    return TruthTable{n, std::move(values)};
}

} // namespace pfs
