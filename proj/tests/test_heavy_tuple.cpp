#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pfs/heavy_tuple.hpp"
#include "helpers.hpp"

using namespace pfs;
using pfs::testing::kTableF;
using pfs::testing::kTableW;

namespace {

Assignment asg(const char* bits) { return Assignment::from_string(bits); }

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("tetrad_weight reproduces all 16 tabulated weights") {
    const TetradWeightRule rule = paper_rule();
    for (unsigned bits = 0; bits < 16; ++bits) {
        const long long by_hand = pfs::testing::tetrad_weight_by_hand(
            (bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1);
        CHECK(tetrad_weight(rule, bits) == by_hand);
        CHECK(tetrad_weight(rule, bits) == kTableW[bits]);
    }
    CHECK(tetrad_weight(rule, 0b0000) == 17);
    CHECK(tetrad_weight(rule, 0b1011) == 50);
    CHECK(tetrad_weight(rule, 0b0101) == 33);
    CHECK_THROWS_AS(tetrad_weight(rule, 16), std::invalid_argument);
}

TEST_CASE("tuple_weight sums block weights") {
    const HeavyTupleInstance one = paper_instance();
    CHECK(tuple_weight(one, asg("1111")) == 42);

    const HeavyTupleInstance two =
        make_heavy_tuple({paper_rule(), paper_rule()}, generate_balanced_pfs(8, 1));
    CHECK(tuple_weight(two, asg("00000000")) == 34);
    CHECK(tuple_weight(two, asg("01011011")) == 83);
    CHECK_THROWS_AS(tuple_weight(two, asg("0101")), std::invalid_argument);
}

TEST_CASE("tuple_weight additivity on random rules") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + int(rng() % 5);
        const HeavyTupleInstance inst = generate_instance(k, rng(), -10, 30);
        const std::uint32_t code = std::uint32_t(rng()) & ((1u << (4 * k)) - 1);
        const Assignment a(4 * k, code);
        long long expected = 0;
        for (int i = 0; i < k; ++i)
            expected += tetrad_weight(inst.rules[std::size_t(i)],
                                      (code >> (4 * (k - 1 - i))) & 0xFu);
        CHECK(tuple_weight(inst, a) == expected);
    }
}

TEST_CASE("tabulated pointer") {
    const BooleanFunction table = paper_pfs_table();
    for (unsigned code = 0; code < 16; ++code)
        CHECK(table.eval(Assignment(4, code)) == kTableF[code]);
    CHECK(table.eval(asg("0101")));
    CHECK_FALSE(table.eval(asg("1101")));
    CHECK(count_satisfying(table, 4) == 8);
}

TEST_CASE("closed-form pointer") {
    const BooleanFunction formula = paper_pfs_formula();
    for (unsigned code = 0; code < 16; ++code) {
        const bool by_hand = pfs::testing::formula_pfs_by_hand(
            (code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1);
        CHECK(formula.eval(Assignment(4, code)) == by_hand);
    }
    CHECK(formula.eval(asg("0000")));
    CHECK(formula.eval(asg("1101")));
    CHECK(count_satisfying(formula, 4) == 8);
}

TEST_CASE("the table and the closed form disagree on exactly two assignments") {
    // Independent scan: tabulated column against the hand-written formula.
    std::vector<unsigned> expected;
    for (unsigned code = 0; code < 16; ++code)
        if (kTableF[code] != pfs::testing::formula_pfs_by_hand((code >> 3) & 1, (code >> 2) & 1,
                                                               (code >> 1) & 1, code & 1))
            expected.push_back(code);
    REQUIRE(expected == std::vector<unsigned>{5, 13}); // 0101 and 1101

    const auto diff = paper_divergence();
    REQUIRE(diff.size() == 2);
    CHECK(diff[0].str() == "0101");
    CHECK(diff[1].str() == "1101");
}

TEST_CASE("generated pointers are balanced") {
    for (int n : {4, 8, 12, 16}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const BooleanFunction fn = generate_balanced_pfs(n, seed);
            CHECK(is_balanced(fn, n));
        }
    }
    CHECK_THROWS_AS(generate_balanced_pfs(1, 0), std::domain_error);
}

TEST_CASE("generator determinism and the frozen sample") {
    const BooleanFunction a = generate_balanced_pfs(4, 1);
    const BooleanFunction b = generate_balanced_pfs(4, 1);
    CHECK(a == b);

    const std::string frozen = read_fixture("balanced_pfs_n4_seed1.txt");
    CHECK(expr_to_string(*std::get<ExprPtr>(a.form())) + "\n" == frozen);
}

TEST_CASE("generate_instance") {
    const HeavyTupleInstance inst = generate_instance(1, 42, 1, 20);
    for (long long w : inst.rules[0].w1) { CHECK(w >= 1); CHECK(w <= 20); }
    for (long long w : inst.rules[0].w2) { CHECK(w >= 1); CHECK(w <= 20); }
    for (long long w : inst.rules[0].w3) { CHECK(w >= 1); CHECK(w <= 20); }
    for (long long w : inst.rules[0].w4) { CHECK(w >= 1); CHECK(w <= 20); }

    const HeavyTupleInstance again = generate_instance(1, 42, 1, 20);
    CHECK(inst.rules == again.rules);
    CHECK(inst.pfs == again.pfs);

    const HeavyTupleInstance flat = generate_instance(2, 7, 5, 5);
    for (const TetradWeightRule& r : flat.rules)
        for (unsigned bits = 0; bits < 16; ++bits)
            CHECK(tetrad_weight(r, bits) == 20);

    CHECK_THROWS_AS(generate_instance(0, 1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(generate_instance(1, 1, 3, 2), std::domain_error);
}

TEST_CASE("max_tetrad_weight") {
    CHECK(max_tetrad_weight(paper_rule()) == 50);

    TetradWeightRule flat;
    flat.w1 = {5, 5};
    flat.w2 = {5, 5, 5, 5};
    flat.w3 = {5, 5};
    flat.w4 = {5, 5, 5, 5};
    CHECK(max_tetrad_weight(flat) == 20);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const TetradWeightRule r = generate_instance(1, rng(), -50, 50).rules[0];
        long long best = tetrad_weight(r, 0);
        for (unsigned bits = 1; bits < 16; ++bits)
            best = std::max(best, tetrad_weight(r, bits));
        CHECK(max_tetrad_weight(r) == best);
    }
}
