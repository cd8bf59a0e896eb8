#include "pfs/problem.hpp"

#include <stdexcept>
#include <unordered_set>

namespace pfs {

ElementSet::ElementSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("element set must be nonempty");
    std::unordered_set<std::string> seen;
    for (const std::string& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate element label '" + l + "'");
}

ElementSet ElementSet::numbered(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
    return ElementSet(std::move(labels));
}

Assignment subset_to_assignment(const ElementSet& elements,
                                const std::set<std::string>& subset) {
    const int n = elements.size();
    std::uint32_t code = 0;
    std::unordered_set<std::string> members(subset.begin(), subset.end());
    for (int i = 0; i < n; ++i)
        if (members.erase(elements.labels()[std::size_t(i)]))
            code |= std::uint32_t{1} << (n - 1 - i);
    if (!members.empty())
        throw std::invalid_argument("unknown element label '" + *members.begin() + "'");
    return Assignment(n, code);
}

std::set<std::string> assignment_to_subset(const ElementSet& elements,
                                           const Assignment& asg) {
    if (asg.size() != elements.size())
        throw std::invalid_argument("arity mismatch between assignment and element set");
    std::set<std::string> subset;
    for (int i = 1; i <= elements.size(); ++i)
        if (asg.bit(i)) subset.insert(elements.labels()[std::size_t(i - 1)]);
    return subset;
}

bool is_feasible(const ProblemInstance& inst, const Assignment& asg) {
    return inst.pfs.eval(asg);
}

long long evaluate_cost(const ProblemInstance& inst, const Assignment& asg) {
    if (asg.size() != inst.arity())
        throw std::invalid_argument("arity mismatch between assignment and instance");
    return std::visit(
        [&](const auto& c) -> long long {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, PopCountCost>) return asg.popcount();
            else if constexpr (std::is_same_v<T, CnfCost>) return c.formula.eval(asg) ? 1 : 0;
            else if constexpr (std::is_same_v<T, OracleCost>) return c.fn(asg);
            else return tetrad_sum(c.rules, asg);
        },
        inst.cost);
}

Solution make_solution(const ProblemInstance& inst, const Assignment& asg) {
    return Solution{asg, evaluate_cost(inst, asg), is_feasible(inst, asg)};
}

} // namespace pfs
