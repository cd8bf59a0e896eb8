#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pfs {

// Exhaustive operations refuse to enumerate more than 2^kEnumCap assignments.
inline constexpr int kEnumCap = 24;

// Expression trees are rejected when they exceed this many nodes per variable,
// keeping evaluation cost linear in a fixed polynomial of the arity.
inline constexpr std::size_t kMaxExprNodesPerVar = 16;

/// Fixed-length 0/1 tuple. Bit i (1-based) is variable x_i; the integer
/// encoding puts x_1 in the most significant position, so the assignments of
/// arity 4 enumerate as 0000, 0001, ..., 1111.
class Assignment {
public:
    Assignment(int n, std::uint32_t code);

    static Assignment from_string(std::string_view bits);

    int size() const { return n_; }
    std::uint32_t code() const { return code_; }

    /// Value of x_var, var in [1, n].
    bool bit(int var) const;

    int popcount() const;
    std::string str() const;

    bool operator==(const Assignment&) const = default;

private:
    int n_;
    std::uint32_t code_;
};

struct Literal {
    int var = 0;       // 1-based
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

/// Conjunction of literals. Canonicalized (sorted by variable index); a
/// variable may appear at most once. The empty cube is the constant true.
class Cube {
public:
    Cube() = default;
    explicit Cube(std::vector<Literal> lits);
    Cube(std::initializer_list<Literal> lits);

    const std::vector<Literal>& literals() const { return lits_; }
    bool eval(const Assignment& asg) const;

    /// True when this cube's literal set contains `other`'s (so `other`
    /// absorbs this cube).
    bool contains(const Cube& other) const;

    bool operator==(const Cube&) const = default;

private:
    std::vector<Literal> lits_;
};

/// Disjunction of cubes; cube order is preserved as constructed. Empty DNF
/// evaluates false.
struct Dnf {
    std::vector<Cube> cubes;

    bool eval(const Assignment& asg) const;
    bool operator==(const Dnf&) const = default;
};

/// Disjunction of literals; same canonical storage as Cube. The empty clause
/// is the constant false.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);
    Clause(std::initializer_list<Literal> lits);

    const std::vector<Literal>& literals() const { return lits_; }
    bool eval(const Assignment& asg) const;

    bool operator==(const Clause&) const = default;

private:
    std::vector<Literal> lits_;
};

/// Conjunction of clauses; empty CNF evaluates true.
struct Cnf {
    std::vector<Clause> clauses;

    bool eval(const Assignment& asg) const;
    bool operator==(const Cnf&) const = default;
};

/// Explicit value table: values[c] is the function value at the assignment
/// with integer code c.
struct TruthTable {
    int n = 0;
    std::vector<bool> values;

    bool operator==(const TruthTable&) const = default;
};

TruthTable make_truth_table(int n, std::vector<bool> values);

// ---------------------------------------------------------------------------
// Expression trees

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Var, Not, And, Or, Xor };

    Kind kind;
    int var = 0;      // Kind::Var only
    ExprPtr a, b;     // Not uses a; And/Or/Xor use a and b
};

ExprPtr expr_var(int var);
ExprPtr expr_not(ExprPtr a);
ExprPtr expr_and(ExprPtr a, ExprPtr b);
ExprPtr expr_or(ExprPtr a, ExprPtr b);
ExprPtr expr_xor(ExprPtr a, ExprPtr b);

bool eval_expr(const Expr& e, const Assignment& asg);
std::size_t expr_size(const Expr& e);
int expr_max_var(const Expr& e);
bool expr_equal(const Expr& a, const Expr& b);

/// S-expression rendering, e.g. "(xor x1 (and x2 (not x3)))".
std::string expr_to_string(const Expr& e);
ExprPtr parse_expr(std::string_view text);

// ---------------------------------------------------------------------------
// BooleanFunction

/// Evaluable predicate over fixed-arity assignments, in one of several
/// representations. The pointer of feasible solutions is carried as one of
/// these.
class BooleanFunction {
public:
    struct Const {
        bool value;
        bool operator==(const Const&) const = default;
    };

    using Form = std::variant<Const, Dnf, Cnf, TruthTable, ExprPtr>;

    static BooleanFunction constant(int n, bool value);
    static BooleanFunction dnf(int n, Dnf d);
    static BooleanFunction cnf(int n, Cnf c);
    static BooleanFunction table(TruthTable t);
    static BooleanFunction expr(int n, ExprPtr e);

    int arity() const { return arity_; }
    const Form& form() const { return form_; }

    bool eval(const Assignment& asg) const;
    bool operator()(const Assignment& asg) const { return eval(asg); }

    bool operator==(const BooleanFunction& other) const;

private:
    BooleanFunction(int arity, Form form) : arity_(arity), form_(std::move(form)) {}

    int arity_;
    Form form_;
};

// ---------------------------------------------------------------------------
// Operations

/// De Morgan dual: each cube becomes a clause of complemented literals.
/// For every assignment, the result evaluates to the negation of the input.
Cnf negate_dnf(const Dnf& d);

/// Drops every cube whose literal set strictly contains another cube's, and
/// exact duplicates (first occurrence kept). Semantics preserved.
Dnf absorb(const Dnf& d);

std::uint64_t count_satisfying(const BooleanFunction& fn, int n);
bool is_balanced(const BooleanFunction& fn, int n);

/// All assignments (ascending integer code) where the two functions differ.
std::vector<Assignment> equivalence_diff(const BooleanFunction& a,
                                         const BooleanFunction& b, int n);

TruthTable to_truth_table(const BooleanFunction& fn, int n);

} // namespace pfs
