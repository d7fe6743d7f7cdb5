#pragma once

#include "dofrs/system.hpp"

#include <map>
#include <variant>

namespace dofrs::geometry {

/// Nonnegative multipliers proving that a weighted sum of premise rows
/// yields the target row: the weighted lhs equals the target lhs exactly
/// and the weighted rhs falls short of the target rhs by `slack` >= 0.
/// Keys index into the premise system's constraint list.
struct FarkasCertificate {
    std::map<int, Rational> multipliers;
    Rational slack = 0;
};

/// Exact re-verification of a certificate against all-inequality premises.
bool verify_certificate(const InequalitySystem& premises, const LinearConstraint& target,
                        const FarkasCertificate& cert);

/// Farkas proof of infeasibility: multipliers with zero weighted lhs and a
/// negative weighted rhs. Indices refer to the all-inequality system the
/// solver ran on (see feasible() below).
struct InfeasibleEvidence {
    std::map<int, Rational> multipliers;
    Rational negative_rhs = 0;
};

bool verify_infeasibility(const InequalitySystem& premises, const InfeasibleEvidence& ev);

/// Rewrites each equality row into the pair {lhs <= rhs, -lhs <= -rhs}, in
/// constraint order. The deterministic layout lets certificate indices be
/// reproduced by callers.
InequalitySystem split_equalities(const InequalitySystem& sys);

/// Appends pin rows (var = value) for each fixed entry, in key order.
InequalitySystem with_fixed(const InequalitySystem& sys, const Assignment& fixed);

using FeasibilityResult = std::variant<Assignment, InfeasibleEvidence>;

/// Exact feasibility with optional pinned coordinates. Returns a witness
/// assignment over sys.vars, or infeasibility evidence whose indices refer
/// to split_equalities(with_fixed(sys, fixed)).
FeasibilityResult feasible(const InequalitySystem& sys, const Assignment& fixed = {});

struct Optimum {
    Rational value;
    Assignment argmax;  // lexicographically smallest optimal point
};

/// Exact LP maximum of objective over sys. Throws InfeasibleError or
/// UnboundedError.
Optimum maximize(const InequalitySystem& sys, const std::map<VarId, Rational>& objective);

struct NotImplied {
    Assignment counterexample;  // satisfies the premises, violates the target
};

using ImplicationResult = std::variant<FarkasCertificate, NotImplied>;

/// Does every premise point satisfy the target inequality? Premises may
/// contain equalities (certificate indices then refer to
/// split_equalities(premises)); the target must be an inequality.
/// Precondition: premises feasible.
ImplicationResult is_implied(const InequalitySystem& premises, const LinearConstraint& target);

/// Convenience verdict; accepts equality targets (checked in both senses).
bool implies(const InequalitySystem& premises, const LinearConstraint& target);

}  // namespace dofrs::geometry
