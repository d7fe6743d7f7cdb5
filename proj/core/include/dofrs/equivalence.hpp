#pragma once

#include "dofrs/lp.hpp"
#include "dofrs/system.hpp"

#include <variant>
#include <vector>

namespace dofrs::geometry {

/// Machine-checkable evidence that two systems describe the same polyhedron:
/// a Farkas implication for every (split) row of each side from the other
/// side, plus matching canonical minimal H-representations as a cross-check.
///
/// a_rows_from_b[i] proves split_equalities(canonicalize(a)).constraints[i]
/// with premise indices into split_equalities(canonicalize(b)); symmetrically
/// for b_rows_from_a.
struct EquivalenceCertificate {
    InequalitySystem minimal_a;
    InequalitySystem minimal_b;
    bool canonical_match = false;
    std::vector<FarkasCertificate> a_rows_from_b;
    std::vector<FarkasCertificate> b_rows_from_a;
};

/// A point lying in exactly one of the two regions.
struct EquivalenceCounterexample {
    Assignment point;
    bool in_a = false;  // true: point satisfies a and violates `violated` of b
    LinearConstraint violated;
};

using EquivalenceResult = std::variant<EquivalenceCertificate, EquivalenceCounterexample>;

/// Decides whether a and b have equal solution sets. Both systems must share
/// one variable space. Requires both systems feasible.
EquivalenceResult equivalent(const InequalitySystem& a, const InequalitySystem& b);

/// True when the result is a certificate whose double inclusion and
/// canonical cross-check both hold.
bool is_equivalent(const EquivalenceResult& r);

}  // namespace dofrs::geometry
