#pragma once

#include "dofrs/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dofrs::fme {

enum class PruneMode : std::uint8_t {
    Syntactic,  // duplicates and constant tautologies
    Pairwise,   // + rows dominated by one other row given the nonnegativity rows
    Full,       // + every row implied by the remaining ones (LP oracle)
};

PruneMode parse_prune_mode(std::string_view name);
std::string to_string(PruneMode mode);

/// A constraint produced by combining one negative-coefficient row with one
/// positive-coefficient row. Parent fields index into the step's groups.
struct ProducedRow {
    LinearConstraint constraint;
    int negative_parent = 0;
    int positive_parent = 0;
};

struct PrunedRow {
    LinearConstraint constraint;
    std::string reason;
};

/// Record of one elimination step. For an FME step the three groups
/// partition the pre-step system; |produced| = |negative| x |positive|.
/// For an equality-substitution step only `equality` is populated.
struct EliminationStep {
    VarId eliminated;
    bool by_substitution = false;
    std::optional<LinearConstraint> equality;
    std::vector<LinearConstraint> absent;
    std::vector<LinearConstraint> negative;
    std::vector<LinearConstraint> positive;
    std::vector<ProducedRow> produced;
    std::vector<PrunedRow> pruned;
};

struct EliminationTrace {
    std::vector<EliminationStep> steps;
};

/// Removes `eq` from the system and eliminates `var` from every other
/// constraint by exact substitution var = (rhs - other terms)/coeff. The
/// projection of the solution set along var is preserved.
/// Throws VariableAbsentError if eq has zero coefficient on var.
InequalitySystem substitute_equality(const InequalitySystem& sys, const LinearConstraint& eq,
                                     const VarId& var);

/// One Fourier-Motzkin step: projects the solution set along var. Rows not
/// mentioning var carry over; each (negative, positive) coefficient pair
/// contributes their positive combination cancelling var. Constant
/// tautologies among the combinations are dropped and recorded in the step.
/// The result is canonicalized.
/// Precondition: no equality row mentions var (substitute first).
InequalitySystem eliminate(const InequalitySystem& sys, const VarId& var, EliminationStep& step);
InequalitySystem eliminate(const InequalitySystem& sys, const VarId& var);

/// Redundancy removal at the requested strength; the solution set is
/// unchanged. Full mode yields the unique minimal H-representation for
/// full-dimensional systems.
InequalitySystem prune(const InequalitySystem& sys, PruneMode mode);
InequalitySystem prune(const InequalitySystem& sys, PruneMode mode,
                       std::vector<PrunedRow>& pruned);

/// Folds eliminate() over eliminate_vars in order, pruning after each step.
/// Equality rows mentioning an eliminated variable are removed by
/// substitution (recorded as substitution steps).
InequalitySystem project(const InequalitySystem& sys, const std::vector<VarId>& eliminate_vars,
                         PruneMode mode, EliminationTrace* trace = nullptr);

/// Recomputes a produced row from its recorded parents; used to replay and
/// audit traces.
LinearConstraint replay_produced(const EliminationStep& step, const ProducedRow& row,
                                 const VarId& var);

}  // namespace dofrs::fme
