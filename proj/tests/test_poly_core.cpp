#include "dofrs/errors.hpp"
#include "dofrs/system.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_helpers.hpp"

using namespace dofrs;
using namespace dofrs::test;

TEST_CASE("normalize scales coefficients to coprime integers") {
    // 2 d1 + 2 d2 <= 26/10  ->  d1 + d2 <= 13/10
    auto c = normalize(le({{"d1", "2"}, {"d2", "2"}}, "26/10"));
    CHECK(c == le({{"d1", "1"}, {"d2", "1"}}, "13/10"));

    // fractional coefficients scale up
    auto f = normalize(le({{"d1", "1/2"}, {"d2", "1/3"}}, "1"));
    CHECK(f == le({{"d1", "3"}, {"d2", "2"}}, "6"));

    // already canonical rows pass through
    auto n = le({{"dc1", "-1"}}, "0");
    CHECK(normalize(n) == n);
}

TEST_CASE("normalize flips equalities so the leading coefficient is positive") {
    auto c = normalize(eq({{"d1", "-1"}}, "-1/2"));
    CHECK(c == eq({{"d1", "1"}}, "1/2"));

    auto mixed = normalize(eq({{"d1", "-2"}, {"d2", "4"}}, "1"));
    CHECK(mixed == eq({{"d1", "1"}, {"d2", "-2"}}, "-1/2"));

    // inequalities never flip: that would change the halfspace
    auto ineq = normalize(le({{"d1", "-2"}}, "4"));
    CHECK(ineq == le({{"d1", "-1"}}, "2"));
}

TEST_CASE("normalize drops explicit zero coefficients and keeps empty rows") {
    auto c = normalize(le({{"d1", "0"}, {"d2", "3"}}, "3"));
    CHECK(c == le({{"d2", "1"}}, "1"));

    LinearConstraint empty;
    empty.rhs = parse_rational("5");
    CHECK(normalize(empty) == empty);
}

TEST_CASE("normalize is idempotent on random constraints") {
    std::mt19937_64 rng(11);
    std::vector<VarId> vars{dof_var(1), dof_var(2), common_var(1), power_var()};
    for (int i = 0; i < 3000; ++i) {
        auto c = random_constraint(rng, vars);
        auto once = normalize(c);
        CHECK(normalize(once) == once);
    }
}

TEST_CASE("canonicalize dedupes, drops tautologies and sorts deterministically") {
    auto s = sys({"d1"}, {le({{"d1", "1"}}, "1"), le({{"d1", "1"}}, "1"), le({}, "1")});
    auto canon = canonicalize(s);
    REQUIRE(canon.constraints.size() == 1);
    CHECK(canon.constraints[0] == le({{"d1", "1"}}, "1"));

    // scaled duplicates collapse too
    auto s2 = sys({"d1", "d2"},
                  {le({{"d1", "2"}, {"d2", "2"}}, "2"), le({{"d1", "1"}, {"d2", "1"}}, "1")});
    CHECK(canonicalize(s2).constraints.size() == 1);
}

TEST_CASE("canonicalize reports constant contradictions") {
    auto s = sys({"d1"}, {le({}, "-1")});
    CHECK_THROWS_AS(canonicalize(s), InfeasibleConstantError);
    auto s2 = sys({"d1"}, {eq({}, "2")});
    CHECK_THROWS_AS(canonicalize(s2), InfeasibleConstantError);
}

TEST_CASE("canonicalize is idempotent and order-insensitive") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        auto s = random_system(rng, 3, 6);
        InequalitySystem canon;
        try {
            canon = canonicalize(s);
        } catch (const InfeasibleConstantError&) {
            continue;
        }
        CHECK(canonicalize(canon) == canon);

        auto shuffled = s;
        std::shuffle(shuffled.constraints.begin(), shuffled.constraints.end(), rng);
        CHECK(canonicalize(shuffled) == canon);
    }
}

TEST_CASE("canonicalize preserves membership on random points") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 1000) {
        auto s = random_system(rng, 3, 5);
        InequalitySystem canon;
        try {
            canon = canonicalize(s);
        } catch (const InfeasibleConstantError&) {
            continue;
        }
        for (int j = 0; j < 5; ++j, ++checked) {
            auto p = random_point(rng, s.vars);
            CHECK(contains(s, p) == contains(canon, p));
        }
    }
}

TEST_CASE("canonically equal systems accept exactly the same points") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        auto a = random_system(rng, 3, 5, /*allow_equality=*/false);
        // b: shuffled, scaled by positive factors, with one duplicate row
        auto b = a;
        std::uniform_int_distribution<int> factor(1, 4);
        for (auto& c : b.constraints) {
            Rational f(factor(rng));
            for (auto& [v, coeff] : c.coeffs) coeff *= f;
            c.rhs *= f;
        }
        if (!b.constraints.empty()) b.constraints.push_back(b.constraints.front());
        std::shuffle(b.constraints.begin(), b.constraints.end(), rng);

        InequalitySystem ca, cb;
        try {
            ca = canonicalize(a);
            cb = canonicalize(b);
        } catch (const InfeasibleConstantError&) {
            continue;
        }
        REQUIRE(ca == cb);
        for (int j = 0; j < 5; ++j) {
            auto p = random_point(rng, a.vars);
            CHECK(contains(a, p) == contains(b, p));
        }
    }
}

TEST_CASE("evaluate checks exact satisfaction") {
    auto c = le({{"d1", "1"}, {"d2", "1"}}, "13/10");
    CHECK(evaluate(c, point({{"d1", "1"}, {"d2", "3/10"}})));   // boundary
    CHECK(!evaluate(c, point({{"d1", "1"}, {"d2", "1/2"}})));
    CHECK(evaluate(le({{"dc1", "-1"}}, "0"), point({{"dc1", "0"}})));

    auto e = eq({{"d1", "2"}}, "1");
    CHECK(evaluate(e, point({{"d1", "1/2"}})));
    CHECK(!evaluate(e, point({{"d1", "1/2000000000"}})));
}

TEST_CASE("evaluate and contains raise MissingVariable") {
    auto c = le({{"d1", "1"}, {"d2", "1"}}, "1");
    CHECK_THROWS_AS(evaluate(c, point({{"d1", "1"}})), MissingVariableError);

    auto s = sys({"d1", "d2"}, {c});
    CHECK_THROWS_AS(contains(s, point({{"d1", "0"}})), MissingVariableError);
}

TEST_CASE("contains is the conjunction over all rows") {
    // the K=2 outer bound at alpha = (9/10, 3/10), written out literally
    auto outer = sys({"d1", "d2"}, {
                                       le({{"d1", "1"}}, "1"),
                                       le({{"d2", "1"}}, "1"),
                                       le({{"d1", "1"}, {"d2", "1"}}, "13/10"),
                                       le({{"d1", "-1"}}, "0"),
                                       le({{"d2", "-1"}}, "0"),
                                   });
    CHECK(contains(outer, point({{"d1", "1"}, {"d2", "3/10"}})));
    CHECK(!contains(outer, point({{"d1", "1"}, {"d2", "1"}})));
    CHECK(contains(outer, point({{"d1", "0"}, {"d2", "0"}})));
}

TEST_CASE("variable names round-trip") {
    for (const char* name : {"d1", "d12", "dp3", "dc7", "a", "a2"}) {
        CHECK(to_string(parse_var(name)) == name);
    }
    CHECK_THROWS_AS(parse_var("x1"), ParseError);
    CHECK_THROWS_AS(parse_var("d"), ParseError);
    CHECK_THROWS_AS(parse_var("d0"), ParseError);
    CHECK_THROWS_AS(parse_var("dp"), ParseError);
    CHECK_THROWS_AS(parse_var(""), ParseError);
    CHECK_THROWS_AS(parse_var("a1x"), ParseError);

    // the fixed variable order: d < dp < dc < a, index within kind
    CHECK(parse_var("d2") < parse_var("dp1"));
    CHECK(parse_var("dp2") < parse_var("dc1"));
    CHECK(parse_var("dc2") < parse_var("a"));
    CHECK(parse_var("a") < parse_var("a1"));
    CHECK(parse_var("d1") < parse_var("d2"));
}
