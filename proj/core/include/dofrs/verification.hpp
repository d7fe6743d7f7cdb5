#pragma once

#include "dofrs/equivalence.hpp"
#include "dofrs/fme.hpp"
#include "dofrs/json_io.hpp"
#include "dofrs/profile.hpp"
#include "dofrs/regions.hpp"

namespace dofrs::verification {

struct TheoremTwoResult {
    bool equivalent = false;  // double inclusion and canonical cross-check
    InequalitySystem projected_minimal;
    InequalitySystem outer_minimal;
    geometry::EquivalenceResult detail;
};

struct InductionStep {
    int k = 0;  // one eliminate+prune step from the k-step family
    bool match = false;
    std::vector<LinearConstraint> missing;  // expected rows not produced
    std::vector<LinearConstraint> extra;    // produced rows not expected
};

/// The last elimination leaves looser subset rows behind; each one must be
/// Farkas-implied by the surviving minimal rows.
struct FinalStepRedundancy {
    std::vector<std::pair<LinearConstraint, geometry::FarkasCertificate>> certified;
    bool all_certified = true;
};

struct AlphaLemmaCheck {
    int checks = 0;
    bool all_hold = true;
};

struct SumDofCheck {
    Rational formula;
    Rational lp_outer;
    Rational lp_projected;
    bool agree = false;
};

struct PhaseTimings {
    double build_ms = 0;
    double project_ms = 0;
    double equivalence_ms = 0;
    double induction_ms = 0;
    double sum_dof_ms = 0;
    double total_ms = 0;
};

struct VerificationReport {
    std::vector<Rational> alpha_user;  // as supplied
    model::CsitProfile profile;
    TheoremTwoResult theorem2;
    std::vector<InductionStep> induction_steps;
    FinalStepRedundancy final_step;
    AlphaLemmaCheck alpha_lemma;
    SumDofCheck sum_dof;
    fme::EliminationTrace trace;
    bool trace_recorded = false;
    PhaseTimings timings;
    bool pass = false;
};

struct VerifyOptions {
    fme::PruneMode prune = fme::PruneMode::Pairwise;  // per-step cadence
    bool record_trace = false;
};

/// The full pipeline: build the 2K-variable rate-splitting system, project
/// out the common-DoF variables, certify equivalence with the outer bound,
/// replay the induction family step by step, certify the final redundancies
/// and the alpha lemmas, and cross-check the closed-form sum-DoF against the
/// LP optimum.
VerificationReport run_verification(const std::vector<Rational>& alpha_user,
                                    const VerifyOptions& options = {});

/// Report serialization (timings included; stdout summaries elsewhere stay
/// timing-free so identical runs print identical bytes).
Json to_json(const VerificationReport& report);

}  // namespace dofrs::verification
