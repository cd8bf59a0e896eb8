#include <doctest.h>

#include "pfs/encoders.hpp"
#include "pfs/heavy_tuple.hpp"
#include "pfs/problem.hpp"
#include "helpers.hpp"

using namespace pfs;

TEST_CASE("subset to assignment and back") {
    const ElementSet elements = ElementSet::numbered(5, "v");
    CHECK(subset_to_assignment(elements, {"v2", "v3"}).str() == "01100");
    CHECK(subset_to_assignment(elements, {}).str() == "00000");
    CHECK(subset_to_assignment(elements, {"v1", "v2", "v3", "v4", "v5"}).str() == "11111");
    CHECK(assignment_to_subset(elements, Assignment::from_string("01100")) ==
          std::set<std::string>{"v2", "v3"});
    CHECK(assignment_to_subset(elements, Assignment::from_string("00000")).empty());
    CHECK_THROWS_AS(subset_to_assignment(elements, {"v9"}), std::invalid_argument);
    CHECK_THROWS_AS(assignment_to_subset(elements, Assignment::from_string("011")),
                    std::invalid_argument);
}

TEST_CASE("subset mapping is a bijection") {
    const ElementSet elements = ElementSet::numbered(10, "a");
    for (std::uint32_t code = 0; code < (1u << 10); ++code) {
        const Assignment a(10, code);
        CHECK(subset_to_assignment(elements, assignment_to_subset(elements, a)) == a);
    }
}

TEST_CASE("element sets reject bad label lists") {
    CHECK_THROWS_AS(ElementSet({}), std::invalid_argument);
    CHECK_THROWS_AS(ElementSet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("is_feasible") {
    const ProblemInstance sat = encode_sat(Cnf{{Clause{{1, false}}}}, 2);
    for (std::uint32_t code = 0; code < 4; ++code)
        CHECK(is_feasible(sat, Assignment(2, code)));

    const ProblemInstance mis = encode_mis(paper_fig2_graph());
    CHECK_FALSE(is_feasible(mis, Assignment::from_string("11000")));
    CHECK(is_feasible(mis, Assignment::from_string("01100")));

    const ProblemInstance heavy = to_problem(paper_instance());
    CHECK_FALSE(is_feasible(heavy, Assignment::from_string("0011")));
}

TEST_CASE("evaluate_cost") {
    const ProblemInstance mis = encode_mis(paper_fig2_graph());
    CHECK(evaluate_cost(mis, Assignment::from_string("01100")) == 2);

    const Cnf formula{{Clause{{1, false}, {2, true}}}};
    const ProblemInstance sat = encode_sat(formula, 2);
    CHECK(evaluate_cost(sat, Assignment::from_string("10")) == 1);
    CHECK(evaluate_cost(sat, Assignment::from_string("01")) == 0);

    const ProblemInstance heavy = to_problem(paper_instance());
    CHECK(evaluate_cost(heavy, Assignment::from_string("0000")) == 17);
    CHECK_THROWS_AS(evaluate_cost(heavy, Assignment::from_string("00000")),
                    std::invalid_argument);
}

TEST_CASE("solutions recompute their own fields") {
    const ProblemInstance mis = encode_mis(paper_fig2_graph());
    for (std::uint32_t code = 0; code < 32; ++code) {
        const Solution s = make_solution(mis, Assignment(5, code));
        CHECK(s.feasible == is_feasible(mis, s.assignment));
        CHECK(s.cost == evaluate_cost(mis, s.assignment));
    }
}
