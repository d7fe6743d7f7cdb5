#pragma once

#include "dofrs/constraint.hpp"

#include <string>
#include <vector>

namespace dofrs {

/// The H-representation of a polyhedron: a finite constraint set over an
/// ordered variable space. Every constraint's support must lie in vars.
struct InequalitySystem {
    std::vector<VarId> vars;  // sorted ascending, no duplicates
    std::vector<LinearConstraint> constraints;

    bool operator==(const InequalitySystem& other) const = default;

    bool has_var(const VarId& v) const;
    int var_position(const VarId& v) const;  // -1 if absent

    InequalitySystem& add(LinearConstraint c);
};

/// Builds a system over the given variables (sorted internally).
InequalitySystem make_system(std::vector<VarId> vars);

/// Normalizes every constraint, removes duplicates and trivially-true rows,
/// and applies the deterministic sort. Idempotent; the solution set is
/// unchanged. Throws InfeasibleConstantError when a row reduces to a false
/// constant statement.
InequalitySystem canonicalize(const InequalitySystem& sys);

/// Exact membership: conjunction of evaluate() over all constraints.
/// Precondition: point assigns every variable of sys.
bool contains(const InequalitySystem& sys, const Assignment& point);

/// Renames variable indices within each kind: index i -> index_map[i-1]
/// (1-based). Used to report results in the caller's original user order.
InequalitySystem rename_indices(const InequalitySystem& sys, const std::vector<int>& index_map);

std::string to_string(const InequalitySystem& sys);

}  // namespace dofrs
