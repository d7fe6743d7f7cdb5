#include "dofrs/verification.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/lp.hpp"

#include <algorithm>
#include <chrono>

namespace dofrs::verification {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Canonical set difference of constraint lists.
std::vector<LinearConstraint> rows_minus(const std::vector<LinearConstraint>& a,
                                         const std::vector<LinearConstraint>& b) {
    std::vector<LinearConstraint> out;
    for (const auto& row : a) {
        if (std::find(b.begin(), b.end(), row) == b.end()) out.push_back(row);
    }
    return out;
}

}  // namespace

VerificationReport run_verification(const std::vector<Rational>& alpha_user,
                                    const VerifyOptions& options) {
    const auto t_total = Clock::now();
    VerificationReport report;
    report.alpha_user = alpha_user;
    report.profile = model::make_profile(alpha_user);
    const model::CsitProfile& profile = report.profile;
    const int K = profile.users();

    auto t = Clock::now();
    const InequalitySystem rs9 = model::rs_after_power_elim(profile);
    const InequalitySystem outer = model::outer_bound(profile);
    report.timings.build_ms = ms_since(t);

    // Project out dc_1..dc_K in the paper's order.
    t = Clock::now();
    std::vector<VarId> order;
    for (int i = 1; i <= K; ++i) order.push_back(common_var(i));
    fme::EliminationTrace trace;
    InequalitySystem projected =
        fme::project(rs9, order, options.prune, options.record_trace ? &trace : nullptr);
    report.theorem2.projected_minimal = fme::prune(projected, fme::PruneMode::Full);
    report.theorem2.outer_minimal = fme::prune(outer, fme::PruneMode::Full);
    report.timings.project_ms = ms_since(t);
    if (options.record_trace) {
        report.trace = std::move(trace);
        report.trace_recorded = true;
    }

    t = Clock::now();
    report.theorem2.detail =
        geometry::equivalent(report.theorem2.projected_minimal, report.theorem2.outer_minimal);
    report.theorem2.equivalent = geometry::is_equivalent(report.theorem2.detail);
    report.timings.equivalence_ms = ms_since(t);

    // Induction family: one eliminate+prune step from the k-step system must
    // land exactly on the (k+1)-step system.
    t = Clock::now();
    for (int k = 0; k <= K - 1; ++k) {
        InductionStep step;
        step.k = k;
        const InequalitySystem from = model::expected_intermediate(profile, k);
        fme::EliminationStep elim;
        InequalitySystem raw = fme::eliminate(from, common_var(k + 1), elim);
        InequalitySystem stepped = fme::prune(raw, fme::PruneMode::Full);
        const InequalitySystem target = k + 1 <= K - 1
                                            ? model::expected_intermediate(profile, k + 1)
                                            : report.theorem2.outer_minimal;
        step.match = stepped.constraints == target.constraints && stepped.vars == target.vars;
        if (!step.match) {
            step.missing = rows_minus(target.constraints, stepped.constraints);
            step.extra = rows_minus(stepped.constraints, target.constraints);
        }
        report.induction_steps.push_back(std::move(step));
    }

    // Closing step on the literal (unpruned) family: eliminating the last
    // common-DoF variable leaves the looser subset rows alongside the tight
    // ones; every dropped row must be Farkas-implied by the survivors, and
    // the survivors must be exactly the minimal outer bound.
    {
        const InequalitySystem literal = model::expected_intermediate_literal(profile, K - 1);
        const InequalitySystem assembled = canonicalize(fme::eliminate(literal, common_var(K)));
        const InequalitySystem minimal = fme::prune(assembled, fme::PruneMode::Full);
        if (minimal.constraints != report.theorem2.outer_minimal.constraints) {
            report.final_step.all_certified = false;
        }
        for (const auto& row : rows_minus(assembled.constraints, minimal.constraints)) {
            geometry::ImplicationResult impl = geometry::is_implied(minimal, row);
            if (std::holds_alternative<geometry::FarkasCertificate>(impl)) {
                report.final_step.certified.emplace_back(
                    row, std::get<geometry::FarkasCertificate>(impl));
            } else {
                report.final_step.all_certified = false;
            }
        }
    }

    // Alpha lemmas: swapping the strongest index of S for the next
    // eliminated index never increases alpha(S). extra = K covers the
    // closing step.
    for (int k = 1; k <= K - 1; ++k) {
        for (const auto& S : model::subsets_of_range(1, k)) {
            if (S.empty()) continue;
            model::AlphaDropCheck check = model::alpha_drop_min(profile, S, k + 1);
            ++report.alpha_lemma.checks;
            if (!check.holds) report.alpha_lemma.all_hold = false;
        }
    }
    report.timings.induction_ms = ms_since(t);

    t = Clock::now();
    report.sum_dof.formula = model::sum_dof(profile);
    std::map<VarId, Rational> objective;
    for (int i = 1; i <= K; ++i) objective[dof_var(i)] = 1;
    report.sum_dof.lp_outer = geometry::maximize(report.theorem2.outer_minimal, objective).value;
    report.sum_dof.lp_projected =
        geometry::maximize(report.theorem2.projected_minimal, objective).value;
    report.sum_dof.agree = report.sum_dof.formula == report.sum_dof.lp_outer &&
                           report.sum_dof.formula == report.sum_dof.lp_projected;
    report.timings.sum_dof_ms = ms_since(t);

    bool induction_ok = std::all_of(report.induction_steps.begin(), report.induction_steps.end(),
                                    [](const InductionStep& s) { return s.match; });
    report.pass = report.theorem2.equivalent && induction_ok && report.final_step.all_certified &&
                  report.alpha_lemma.all_hold && report.sum_dof.agree;
    report.timings.total_ms = ms_since(t_total);
    return report;
}

Json to_json(const VerificationReport& report) {
    Json alpha = Json::array();
    for (const auto& a : report.alpha_user) alpha.push_back(to_string(a));
    Json alpha_sorted = Json::array();
    for (const auto& a : report.profile.alphas) alpha_sorted.push_back(to_string(a));

    Json steps = Json::array();
    for (const auto& s : report.induction_steps) {
        Json step{{"k", s.k}, {"match", s.match}};
        if (!s.match) {
            Json missing = Json::array();
            for (const auto& r : s.missing) missing.push_back(dofrs::to_json(r));
            Json extra = Json::array();
            for (const auto& r : s.extra) extra.push_back(dofrs::to_json(r));
            step["missing"] = std::move(missing);
            step["extra"] = std::move(extra);
        }
        steps.push_back(std::move(step));
    }

    Json final_step = Json::array();
    for (const auto& [row, cert] : report.final_step.certified) {
        final_step.push_back(
            Json{{"row", dofrs::to_json(row)}, {"certificate", dofrs::to_json(cert)}});
    }

    Json j;
    j["alpha"] = std::move(alpha);
    j["alpha_sorted"] = std::move(alpha_sorted);
    j["permutation"] = report.profile.permutation;
    j["K"] = report.profile.users();
    j["theorem2"] = Json{{"equivalent", report.theorem2.equivalent},
                         {"projected_minimal", dofrs::to_json(report.theorem2.projected_minimal)},
                         {"outer_minimal", dofrs::to_json(report.theorem2.outer_minimal)},
                         {"detail", dofrs::to_json(report.theorem2.detail)}};
    j["induction_steps"] = std::move(steps);
    j["final_step"] = Json{{"all_certified", report.final_step.all_certified},
                           {"certified", std::move(final_step)}};
    j["alpha_lemma"] =
        Json{{"checks", report.alpha_lemma.checks}, {"all_hold", report.alpha_lemma.all_hold}};
    j["sum_dof"] = Json{{"formula", to_string(report.sum_dof.formula)},
                        {"lp_outer", to_string(report.sum_dof.lp_outer)},
                        {"lp_projected", to_string(report.sum_dof.lp_projected)},
                        {"agree", report.sum_dof.agree}};
    if (report.trace_recorded) j["trace"] = dofrs::to_json(report.trace);
    j["timings_ms"] = Json{{"build", report.timings.build_ms},
                           {"project", report.timings.project_ms},
                           {"equivalence", report.timings.equivalence_ms},
                           {"induction", report.timings.induction_ms},
                           {"sum_dof", report.timings.sum_dof_ms},
                           {"total", report.timings.total_ms}};
    j["pass"] = report.pass;
    return j;
}

}  // namespace dofrs::verification
