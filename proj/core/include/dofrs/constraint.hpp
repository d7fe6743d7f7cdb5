#pragma once

#include "dofrs/rational.hpp"
#include "dofrs/var_id.hpp"

#include <map>
#include <string>

namespace dofrs {

enum class Relation : std::uint8_t { LessEq = 0, Eq = 1 };

/// A point (or partial point): exact values keyed by variable.
using Assignment = std::map<VarId, Rational>;

/// One inequality or equality with sparse exact coefficients. Zero
/// coefficients are never stored.
struct LinearConstraint {
    std::map<VarId, Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs = 0;

    /// lhs value at the given point. Throws MissingVariableError if a
    /// support variable is unassigned.
    Rational lhs_at(const Assignment& point) const;

    bool operator==(const LinearConstraint& other) const;
    bool operator<(const LinearConstraint& other) const;  // (coeffs, rel, rhs) lexicographic
};

/// Convenience builder: sum(terms) rel rhs, dropping zero coefficients.
LinearConstraint make_constraint(std::initializer_list<std::pair<VarId, Rational>> terms,
                                 Relation rel, Rational rhs);

/// Canonical form: coefficients scaled to coprime integers; for equalities
/// the first nonzero coefficient (in variable order) is positive. The
/// solution set is unchanged. Empty-support constraints pass through.
LinearConstraint normalize(const LinearConstraint& c);

/// Exact satisfaction test. Precondition: support(c) is assigned in point.
bool evaluate(const LinearConstraint& c, const Assignment& point);

/// True for 0 <= rhs with rhs >= 0 and for 0 = 0.
bool trivially_true(const LinearConstraint& c);

/// True for 0 <= rhs with rhs < 0 and for 0 = rhs with rhs != 0.
bool trivially_false(const LinearConstraint& c);

std::string to_string(const LinearConstraint& c);

}  // namespace dofrs
