#include "dofrs/errors.hpp"
#include "dofrs/verification.hpp"

#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace dofrs;
using namespace dofrs::test;
using namespace dofrs::verification;

TEST_CASE("the pipeline certifies the worked profiles") {
    for (const char* alpha : {"9/10,3/10", "1,1/2,1/5", "1/2", "1,1", "0,0,0"}) {
        auto report = run_verification(parse_rational_list(alpha));
        INFO("alpha = ", alpha);
        CHECK(report.pass);
        CHECK(report.theorem2.equivalent);
        CHECK(report.final_step.all_certified);
        CHECK(report.alpha_lemma.all_hold);
        CHECK(report.sum_dof.agree);
    }
}

TEST_CASE("zero CSIT collapses the region to the unit sum") {
    auto report = run_verification(parse_rational_list("0,0,0"));
    REQUIRE(report.pass);
    auto expected = canonicalize(
        sys({"d1", "d2", "d3"},
            {le({{"d1", "1"}, {"d2", "1"}, {"d3", "1"}}, "1"), le({{"d1", "-1"}}, "0"),
             le({{"d2", "-1"}}, "0"), le({{"d3", "-1"}}, "0")}));
    CHECK(report.theorem2.outer_minimal == expected);
    CHECK(report.theorem2.projected_minimal == expected);
    CHECK(report.sum_dof.formula == 1);
}

TEST_CASE("random profiles pass across prune cadences") {
    std::mt19937_64 rng(101);
    for (auto mode : {fme::PruneMode::Syntactic, fme::PruneMode::Pairwise}) {
        for (int trial = 0; trial < 3; ++trial) {
            int K = 1 + static_cast<int>(rng() % 4);
            auto profile = model::random_profile(K, rng, 200);
            VerifyOptions options;
            options.prune = mode;
            auto report = run_verification(profile.alphas, options);
            CHECK(report.pass);
        }
    }
}

TEST_CASE("report invariant: theorem2 success implies the rest") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 6; ++trial) {
        int K = 1 + static_cast<int>(rng() % 4);
        auto profile = model::random_profile(K, rng, 500);
        auto report = run_verification(profile.alphas);
        if (report.theorem2.equivalent) {
            for (const auto& s : report.induction_steps) CHECK(s.match);
            CHECK(report.sum_dof.agree);
        }
    }
}

TEST_CASE("unsorted input is sorted and remembered") {
    auto report = run_verification(parse_rational_list("3/10,9/10"));
    CHECK(report.pass);
    CHECK(report.profile.alphas == std::vector<Rational>{rat("9/10"), rat("3/10")});
    CHECK(report.profile.permutation == std::vector<int>{2, 1});
    CHECK(report.alpha_user == std::vector<Rational>{rat("3/10"), rat("9/10")});
}

TEST_CASE("the trace is embedded only on request") {
    VerifyOptions with_trace;
    with_trace.record_trace = true;
    auto traced = run_verification(parse_rational_list("9/10,3/10"), with_trace);
    CHECK(traced.trace_recorded);
    CHECK(traced.trace.steps.size() == 2);

    auto plain = run_verification(parse_rational_list("9/10,3/10"));
    CHECK(!plain.trace_recorded);

    auto j = to_json(traced);
    CHECK(j.contains("trace"));
    CHECK(j["pass"] == true);
    CHECK(j["theorem2"]["equivalent"] == true);
    CHECK(j["sum_dof"]["formula"] == "13/10");
    CHECK(j["timings_ms"].contains("total"));

    auto j2 = to_json(plain);
    CHECK(!j2.contains("trace"));
}

TEST_CASE("profile validation propagates") {
    CHECK_THROWS_AS(run_verification(parse_rational_list("2")), ParseError);
    CHECK_THROWS_AS(run_verification({}), ParseError);
}
