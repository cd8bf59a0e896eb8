#pragma once

#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pfs/boolean.hpp"
#include "pfs/tetrad.hpp"

namespace pfs {

/// Ordered, uniquely labeled solution elements a_1 ... a_n.
class ElementSet {
public:
    explicit ElementSet(std::vector<std::string> labels);

    /// Labels "<prefix>1" ... "<prefix>n".
    static ElementSet numbered(int n, const std::string& prefix);

    int size() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const ElementSet&) const = default;

private:
    std::vector<std::string> labels_;
};

struct PopCountCost {};                                  // number of selected elements
struct CnfCost { Cnf formula; };                         // 1 iff the formula is satisfied
struct OracleCost {                                      // arbitrary integer procedure
    std::function<long long(const Assignment&)> fn;
};
struct TetradCost { std::vector<TetradWeightRule> rules; };

using CostFunction = std::variant<PopCountCost, CnfCost, OracleCost, TetradCost>;

/// A combinatorial problem: elements, pointer of feasible solutions, and cost.
/// The optimization sense is always maximize.
struct ProblemInstance {
    ElementSet elements;
    BooleanFunction pfs;
    CostFunction cost;

    int arity() const { return elements.size(); }
};

struct Solution {
    Assignment assignment;
    long long cost = 0;
    bool feasible = false;
};

Assignment subset_to_assignment(const ElementSet& elements,
                                const std::set<std::string>& subset);
std::set<std::string> assignment_to_subset(const ElementSet& elements,
                                           const Assignment& asg);

bool is_feasible(const ProblemInstance& inst, const Assignment& asg);
long long evaluate_cost(const ProblemInstance& inst, const Assignment& asg);
Solution make_solution(const ProblemInstance& inst, const Assignment& asg);

} // namespace pfs
