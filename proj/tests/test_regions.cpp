#include "dofrs/errors.hpp"
#include "dofrs/fme.hpp"
#include "dofrs/lp.hpp"
#include "dofrs/profile.hpp"
#include "dofrs/regions.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_helpers.hpp"

using namespace dofrs;
using namespace dofrs::test;
using namespace dofrs::model;

namespace {

bool has_row(const InequalitySystem& s, const LinearConstraint& c) {
    auto n = normalize(c);
    return std::find(s.constraints.begin(), s.constraints.end(), n) != s.constraints.end();
}

std::vector<VarId> common_vars(int lo, int hi) {
    std::vector<VarId> out;
    for (int i = lo; i <= hi; ++i) out.push_back(common_var(i));
    return out;
}

}  // namespace

TEST_CASE("profiles validate, sort and remember the permutation") {
    auto p = make_profile({rat("3/10"), rat("9/10")});
    CHECK(p.alphas == std::vector<Rational>{rat("9/10"), rat("3/10")});
    CHECK(p.permutation == std::vector<int>{2, 1});
    CHECK(!p.was_sorted());

    auto sorted = make_profile({rat("1"), rat("1/2")});
    CHECK(sorted.was_sorted());

    CHECK_THROWS_AS(make_profile({}), ParseError);
    CHECK_THROWS_AS(make_profile({rat("2")}), ParseError);
    CHECK_THROWS_AS(make_profile({rat("-1/2")}), ParseError);
}

TEST_CASE("outer_bound instantiates every subset row") {
    SUBCASE("K=2, alpha=(9/10,3/10)") {
        auto outer = outer_bound(make_profile({rat("9/10"), rat("3/10")}));
        CHECK(outer.constraints.size() == 5);
        CHECK(has_row(outer, le({{"d1", "1"}}, "1")));
        CHECK(has_row(outer, le({{"d2", "1"}}, "1")));
        CHECK(has_row(outer, le({{"d1", "1"}, {"d2", "1"}}, "13/10")));
        CHECK(has_row(outer, le({{"d1", "-1"}}, "0")));
        CHECK(has_row(outer, le({{"d2", "-1"}}, "0")));
    }

    SUBCASE("K=1 is the unit interval") {
        auto outer = outer_bound(make_profile({rat("7/10")}));
        CHECK(outer.constraints.size() == 2);
        CHECK(has_row(outer, le({{"d1", "1"}}, "1")));
        CHECK(has_row(outer, le({{"d1", "-1"}}, "0")));
    }

    SUBCASE("K=3, alpha=(1,1/2,1/5)") {
        auto outer = outer_bound(make_profile({rat("1"), rat("1/2"), rat("1/5")}));
        CHECK(outer.constraints.size() == (1 << 3) - 1 + 3);
        CHECK(has_row(outer, le({{"d2", "1"}, {"d3", "1"}}, "6/5")));
        CHECK(has_row(outer, le({{"d1", "1"}, {"d2", "1"}, {"d3", "1"}}, "17/10")));
        CHECK(has_row(outer, le({{"d1", "1"}, {"d2", "1"}}, "3/2")));
        CHECK(has_row(outer, le({{"d1", "1"}, {"d3", "1"}}, "6/5")));
    }
}

TEST_CASE("rs_region_single_power matches the documented shape") {
    auto rs = rs_region_single_power(make_profile({rat("9/10"), rat("3/10")}));
    CHECK(rs.vars.size() == 7);
    int equalities = 0, inequalities = 0;
    for (const auto& c : rs.constraints) {
        (c.rel == Relation::Eq ? equalities : inequalities)++;
    }
    CHECK(equalities == 2);
    CHECK(inequalities == 13);

    // the worked witness for d = (1, 3/10)
    auto witness = point({{"d1", "1"},
                          {"d2", "3/10"},
                          {"dp1", "3/10"},
                          {"dp2", "3/10"},
                          {"dc1", "7/10"},
                          {"dc2", "0"},
                          {"a", "3/10"}});
    CHECK(contains(rs, witness));

    // moving off the split equality breaks membership
    witness[parse_var("dp1")] = rat("2/10");
    CHECK(!contains(rs, witness));
}

TEST_CASE("zero CSIT forces all DoF through the common part") {
    auto rs = rs_region_single_power(make_profile({rat("0"), rat("0")}));
    std::vector<VarId> aux{private_var(1), private_var(2), common_var(1), common_var(2),
                           power_var()};
    auto projected = fme::prune(fme::project(rs, aux, fme::PruneMode::Pairwise),
                                fme::PruneMode::Full);
    auto expected = canonicalize(sys({"d1", "d2"}, {le({{"d1", "1"}, {"d2", "1"}}, "1"),
                                                    le({{"d1", "-1"}}, "0"),
                                                    le({{"d2", "-1"}}, "0")}));
    CHECK(projected == expected);
}

TEST_CASE("rs_after_private_elim lists the reduced rows") {
    SUBCASE("K=1, alpha=1: the seven rows, written out") {
        auto rs = rs_after_private_elim(make_profile({rat("1")}));
        CHECK(rs.constraints.size() == 7);
        CHECK(has_row(rs, le({{"dc1", "-1"}}, "0")));
        CHECK(has_row(rs, le({{"d1", "1"}, {"dc1", "-1"}}, "1")));
        CHECK(has_row(rs, le({{"d1", "1"}, {"dc1", "-1"}, {"a", "-1"}}, "0")));
        CHECK(has_row(rs, le({{"dc1", "1"}, {"a", "1"}}, "1")));
        CHECK(has_row(rs, le({{"a", "-1"}}, "0")));
        CHECK(has_row(rs, le({{"a", "1"}}, "1")));
        CHECK(has_row(rs, le({{"d1", "-1"}}, "0")));
    }

    SUBCASE("row count is 4K+3") {
        for (int k = 1; k <= 4; ++k) {
            std::mt19937_64 rng(100 + k);
            auto profile = random_profile(k, rng, 30);
            CHECK(rs_after_private_elim(profile).constraints.size() ==
                  static_cast<size_t>(4 * k + 3));
        }
    }
}

TEST_CASE("substituting the split equalities reproduces the reduced system") {
    // Substituting dp_i = d_i - dc_i carries the -dp_i <= 0 rows into
    // dc_i - d_i <= 0; the substitution path therefore equals the builder
    // plus exactly those K rows, and both project to the same DoF region.
    std::mt19937_64 rng(67);
    for (int K = 2; K <= 4; ++K) {
        auto profile = random_profile(K, rng, 30);
        InequalitySystem path = rs_region_single_power(profile);
        for (int i = 1; i <= K; ++i) {
            LinearConstraint split;
            split.rel = Relation::Eq;
            split.coeffs = {{dof_var(i), 1}, {private_var(i), -1}, {common_var(i), -1}};
            split.rhs = 0;
            path = fme::substitute_equality(path, split, private_var(i));
        }
        InequalitySystem builder_plus = rs_after_private_elim(profile);
        for (int i = 1; i <= K; ++i) {
            LinearConstraint extra;
            extra.coeffs = {{common_var(i), 1}, {dof_var(i), -1}};
            extra.rhs = 0;
            builder_plus.add(extra);
        }
        CHECK(path == canonicalize(builder_plus));

        if (K <= 3) {
            std::vector<VarId> aux = common_vars(1, K);
            aux.push_back(power_var());
            auto proj_path = fme::prune(fme::project(path, aux, fme::PruneMode::Pairwise),
                                        fme::PruneMode::Full);
            auto proj_builder = fme::prune(
                fme::project(rs_after_private_elim(profile), aux, fme::PruneMode::Pairwise),
                fme::PruneMode::Full);
            CHECK(proj_path == proj_builder);
        }
    }
}

TEST_CASE("rs_after_power_elim lists the 4K+1 rows") {
    auto rs = rs_after_power_elim(make_profile({rat("9/10"), rat("3/10")}));
    CHECK(rs.constraints.size() == 9);
    CHECK(has_row(rs, le({{"d1", "1"}, {"dc1", "-1"}}, "9/10")));
    CHECK(has_row(rs, le({{"d2", "1"}, {"dc2", "-1"}}, "3/10")));
    CHECK(has_row(rs, le({{"dc1", "-1"}}, "0")));
    CHECK(has_row(rs, le({{"dc2", "-1"}}, "0")));
    CHECK(has_row(rs, le({{"d1", "1"}, {"dc2", "1"}}, "1")));
    CHECK(has_row(rs, le({{"d2", "1"}, {"dc1", "1"}}, "1")));
    CHECK(has_row(rs, le({{"dc1", "1"}, {"dc2", "1"}}, "1")));
    CHECK(has_row(rs, le({{"d1", "-1"}}, "0")));
    CHECK(has_row(rs, le({{"d2", "-1"}}, "0")));
}

TEST_CASE("the mechanical power-elimination path equals the builder") {
    std::mt19937_64 rng(71);
    for (int K = 2; K <= 5; ++K) {
        auto profile = random_profile(K, rng, 30);
        InequalitySystem sys8 = rs_after_private_elim(profile);

        // replace sum dc + a <= 1 with the equality, substitute a away,
        // and let pairwise pruning drop the -sum dc <= 0 leftover
        LinearConstraint budget;
        for (int i = 1; i <= K; ++i) budget.coeffs[common_var(i)] = 1;
        budget.coeffs[power_var()] = 1;
        budget.rhs = 1;
        std::erase(sys8.constraints, normalize(budget));
        LinearConstraint equality = budget;
        equality.rel = Relation::Eq;
        sys8.add(equality);

        auto mechanical = fme::prune(fme::substitute_equality(sys8, equality, power_var()),
                                     fme::PruneMode::Pairwise);
        CHECK(mechanical == rs_after_power_elim(profile));
    }
}

TEST_CASE("projecting the zero-CSIT common-DoF system collapses to sum <= 1") {
    auto rs = rs_after_power_elim(make_profile({rat("0"), rat("0")}));
    auto projected = fme::prune(
        fme::project(rs, common_vars(1, 2), fme::PruneMode::Pairwise), fme::PruneMode::Full);
    auto expected = canonicalize(sys({"d1", "d2"}, {le({{"d1", "1"}, {"d2", "1"}}, "1"),
                                                    le({{"d1", "-1"}}, "0"),
                                                    le({{"d2", "-1"}}, "0")}));
    CHECK(projected == expected);
}

TEST_CASE("expected_intermediate spans the induction family") {
    auto profile = make_profile({rat("1"), rat("1/2"), rat("1/5")});

    SUBCASE("k out of range") {
        CHECK_THROWS_AS(expected_intermediate(profile, -1), IndexOutOfRangeError);
        CHECK_THROWS_AS(expected_intermediate(profile, 3), IndexOutOfRangeError);
    }

    SUBCASE("k=0 describes the same region as the power-eliminated system") {
        CHECK(expected_intermediate(profile, 0) ==
              fme::prune(rs_after_power_elim(profile), fme::PruneMode::Full));
    }

    SUBCASE("k=1 literal family is the paper's five-group system plus the empty-set row") {
        auto literal = expected_intermediate_literal(profile, 1);
        auto hand = canonicalize(sys(
            {"d1", "d2", "d3", "dc2", "dc3"},
            {
                le({{"d2", "1"}, {"dc2", "-1"}}, "1/2"),
                le({{"d3", "1"}, {"dc3", "-1"}}, "1/5"),
                le({{"dc2", "-1"}}, "0"),
                le({{"dc3", "-1"}}, "0"),
                le({{"d1", "1"}, {"d2", "1"}, {"dc3", "1"}}, "2"),
                le({{"d1", "1"}, {"d3", "1"}, {"dc2", "1"}}, "2"),
                le({{"d2", "1"}, {"dc3", "1"}}, "1"),
                le({{"d3", "1"}, {"dc2", "1"}}, "1"),
                le({{"d1", "1"}, {"dc2", "1"}, {"dc3", "1"}}, "1"),
                le({{"dc2", "1"}, {"dc3", "1"}}, "1"),  // the S = empty convention row
                le({{"d1", "-1"}}, "0"),
                le({{"d2", "-1"}}, "0"),
                le({{"d3", "-1"}}, "0"),
            }));
        CHECK(literal == hand);
    }

    SUBCASE("full pruning removes exactly the empty-set row at a generic profile") {
        auto generic = make_profile({rat("9/10"), rat("1/2"), rat("1/5")});
        auto literal = expected_intermediate_literal(generic, 1);
        auto pruned = expected_intermediate(generic, 1);
        CHECK(pruned.constraints.size() + 1 == literal.constraints.size());
        CHECK(!has_row(pruned, le({{"dc2", "1"}, {"dc3", "1"}}, "1")));
    }

    SUBCASE("k=K-1 keeps four row groups over the last common variable") {
        auto literal = expected_intermediate_literal(profile, 2);
        CHECK(has_row(literal, le({{"d3", "1"}, {"dc3", "-1"}}, "1/5")));
        CHECK(has_row(literal, le({{"dc3", "-1"}}, "0")));
        CHECK(has_row(literal, le({{"d1", "1"}, {"d2", "1"}, {"d3", "1"}}, "5/2")));
        CHECK(has_row(literal, le({{"d1", "1"}, {"d2", "1"}, {"dc3", "1"}}, "3/2")));
        // only dc3 remains
        CHECK(literal.has_var(common_var(3)));
        CHECK(!literal.has_var(common_var(2)));
    }
}

TEST_CASE("one elimination step advances the induction family") {
    std::mt19937_64 rng(73);
    for (int K = 2; K <= 4; ++K) {
        auto profile = random_profile(K, rng, 20);
        for (int k = 0; k <= K - 1; ++k) {
            auto from = expected_intermediate(profile, k);
            auto stepped = fme::prune(fme::eliminate(from, common_var(k + 1)),
                                      fme::PruneMode::Full);
            auto target = k + 1 <= K - 1
                              ? expected_intermediate(profile, k + 1)
                              : fme::prune(outer_bound(profile), fme::PruneMode::Full);
            CHECK(stepped == target);
        }
    }
}

TEST_CASE("private_dof_cap_full evaluates the nested positive parts") {
    auto zero2 = make_profile({rat("0"), rat("0")});
    CHECK(private_dof_cap_full({rat("1"), rat("0")}, zero2, 1) == rat("1"));

    auto quarter = make_profile({rat("1/4"), rat("1/8")});
    CHECK(private_dof_cap_full({rat("1/2"), rat("1")}, quarter, 1) == rat("0"));

    CHECK_THROWS_AS(private_dof_cap_full({rat("1")}, make_profile({rat("1")}), 1),
                    IndexOutOfRangeError);
    CHECK_THROWS_AS(private_dof_cap_full({rat("1"), rat("0")}, zero2, 3),
                    IndexOutOfRangeError);
}

TEST_CASE("equal power levels reduce the cap to min(a, alpha_i)") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> den(1, 50);
    for (int trial = 0; trial < 1000; ++trial) {
        int K = 2 + static_cast<int>(rng() % 3);
        auto profile = random_profile(K, rng, 50);
        int d = den(rng);
        Rational a(static_cast<int>(rng() % (d + 1)), d);
        std::vector<Rational> a_vec(K, a);
        for (int i = 1; i <= K; ++i) {
            Rational expected = std::min(a, profile.alphas[i - 1]);
            CHECK(private_dof_cap_full(a_vec, profile, i) == expected);
        }
    }
}

TEST_CASE("alpha_drop_min: the redundancy lemma") {
    auto profile = make_profile({rat("9/10"), rat("1/2"), rat("1/5")});
    auto check = alpha_drop_min(profile, {1, 2}, 3);
    CHECK(check.lhs == rat("7/10"));
    CHECK(check.rhs == rat("14/10"));
    CHECK(check.holds);

    SUBCASE("uniform profiles hold with equality") {
        auto uniform = make_profile({rat("1/3"), rat("1/3"), rat("1/3")});
        auto c = alpha_drop_min(uniform, {1, 2}, 3);
        CHECK(c.lhs == c.rhs);
        CHECK(c.holds);
    }

    SUBCASE("argument validation") {
        CHECK_THROWS_AS(alpha_drop_min(profile, {}, 2), EmptySetError);
        CHECK_THROWS_AS(alpha_drop_min(profile, {1, 2}, 2), IndexOutOfRangeError);
        CHECK_THROWS_AS(alpha_drop_min(profile, {1}, 4), IndexOutOfRangeError);
    }

    SUBCASE("holds for every sorted profile and admissible pair") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 1000; ++trial) {
            int K = 2 + static_cast<int>(rng() % 7);  // up to K = 8
            auto p = random_profile(K, rng, 100);
            // random nonempty S and extra beyond its maximum
            int extra = 2 + static_cast<int>(rng() % (K - 1));
            std::vector<int> S;
            for (int i = 1; i < extra; ++i) {
                if (rng() % 2) S.push_back(i);
            }
            if (S.empty()) S.push_back(extra - 1);
            CHECK(alpha_drop_min(p, S, extra).holds);
        }
    }
}

TEST_CASE("sum_dof closed form") {
    CHECK(sum_dof(make_profile({rat("1"), rat("1/2"), rat("1/5")})) == rat("17/10"));
    CHECK(sum_dof(make_profile({rat("0"), rat("0"), rat("0")})) == 1);
    CHECK(sum_dof(make_profile({rat("1"), rat("1"), rat("1"), rat("1")})) == 4);
    CHECK(sum_dof(make_profile({rat("1/2")})) == 1);
}

TEST_CASE("sum_dof equals the LP optimum over the outer bound") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        int K = 1 + static_cast<int>(rng() % 4);
        auto profile = random_profile(K, rng, 100);
        std::map<VarId, Rational> obj;
        for (int i = 1; i <= K; ++i) obj[dof_var(i)] = 1;
        CHECK(geometry::maximize(outer_bound(profile), obj).value == sum_dof(profile));
    }
}
