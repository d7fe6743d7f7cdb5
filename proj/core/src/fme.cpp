#include "dofrs/fme.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/lp.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace dofrs::fme {

PruneMode parse_prune_mode(std::string_view name) {
    if (name == "syntactic") return PruneMode::Syntactic;
    if (name == "pairwise") return PruneMode::Pairwise;
    if (name == "full") return PruneMode::Full;
    throw ParseError("unknown prune mode: '" + std::string(name) + "'");
}

std::string to_string(PruneMode mode) {
    switch (mode) {
        case PruneMode::Syntactic: return "syntactic";
        case PruneMode::Pairwise: return "pairwise";
        case PruneMode::Full: return "full";
    }
    return "?";
}

InequalitySystem substitute_equality(const InequalitySystem& sys, const LinearConstraint& eq,
                                     const VarId& var) {
    if (eq.rel != Relation::Eq) {
        throw Error("substitute_equality requires an equality constraint");
    }
    auto pivot_it = eq.coeffs.find(var);
    if (pivot_it == eq.coeffs.end() || pivot_it->second == 0) {
        throw VariableAbsentError("equality has no coefficient on " + to_string(var));
    }
    const Rational& pivot = pivot_it->second;
    const LinearConstraint eq_canon = normalize(eq);

    InequalitySystem out;
    for (const auto& v : sys.vars) {
        if (v != var) out.vars.push_back(v);
    }
    for (const auto& c : sys.constraints) {
        if (normalize(c) == eq_canon) continue;
        auto it = c.coeffs.find(var);
        if (it == c.coeffs.end()) {
            out.constraints.push_back(c);
            continue;
        }
        // c - (c_var / pivot) * eq cancels var exactly.
        Rational factor = it->second / pivot;
        LinearConstraint r;
        r.rel = c.rel;
        r.rhs = c.rhs - factor * eq.rhs;
        r.coeffs = c.coeffs;
        for (const auto& [v, coeff] : eq.coeffs) r.coeffs[v] -= factor * coeff;
        std::erase_if(r.coeffs, [](const auto& e) { return e.second == 0; });
        out.constraints.push_back(std::move(r));
    }
    return canonicalize(out);
}

InequalitySystem eliminate(const InequalitySystem& sys, const VarId& var, EliminationStep& step) {
    step.eliminated = var;
    step.by_substitution = false;

    for (const auto& c : sys.constraints) {
        auto it = c.coeffs.find(var);
        if (it == c.coeffs.end()) {
            step.absent.push_back(c);
        } else if (c.rel == Relation::Eq) {
            throw Error("eliminate: equality mentions " + to_string(var) +
                        "; substitute it first");
        } else if (it->second < 0) {
            step.negative.push_back(c);
        } else {
            step.positive.push_back(c);
        }
    }

    InequalitySystem out;
    for (const auto& v : sys.vars) {
        if (v != var) out.vars.push_back(v);
    }
    out.constraints = step.absent;

    for (int ni = 0; ni < static_cast<int>(step.negative.size()); ++ni) {
        const auto& neg = step.negative[ni];
        const Rational a = neg.coeffs.at(var);  // a < 0
        for (int pi = 0; pi < static_cast<int>(step.positive.size()); ++pi) {
            const auto& pos = step.positive[pi];
            const Rational b = pos.coeffs.at(var);  // b > 0

            LinearConstraint combined;
            combined.rel = Relation::LessEq;
            combined.rhs = b * neg.rhs + (-a) * pos.rhs;
            for (const auto& [v, coeff] : neg.coeffs) combined.coeffs[v] += b * coeff;
            for (const auto& [v, coeff] : pos.coeffs) combined.coeffs[v] += (-a) * coeff;
            std::erase_if(combined.coeffs, [](const auto& e) { return e.second == 0; });
            combined = normalize(combined);

            step.produced.push_back({combined, ni, pi});
            if (trivially_true(combined)) {
                step.pruned.push_back({combined, "tautology"});
            } else {
                out.constraints.push_back(combined);
            }
        }
    }
    return canonicalize(out);
}

InequalitySystem eliminate(const InequalitySystem& sys, const VarId& var) {
    EliminationStep step;
    return eliminate(sys, var, step);
}

namespace {

// Single-row domination: target = lambda*source + sum mu_v * (-x_v <= 0)
// with lambda > 0, mu >= 0 over variables carrying a nonnegativity row, and
// lambda*source.rhs <= target.rhs.
bool dominated_by(const LinearConstraint& target, const LinearConstraint& source,
                  const std::set<VarId>& nonneg) {
    if (target.rel != Relation::LessEq || source.rel != Relation::LessEq) return false;

    std::optional<Rational> lo, hi;  // lambda interval, intersected with (0, inf)
    auto tighten_lo = [&](const Rational& v) {
        if (!lo || v > *lo) lo = v;
    };
    auto tighten_hi = [&](const Rational& v) {
        if (!hi || v < *hi) hi = v;
    };

    std::set<VarId> support;
    for (const auto& [v, c] : target.coeffs) support.insert(v);
    for (const auto& [v, c] : source.coeffs) support.insert(v);

    for (const auto& v : support) {
        auto tit = target.coeffs.find(v);
        auto sit = source.coeffs.find(v);
        Rational t = tit == target.coeffs.end() ? Rational(0) : tit->second;
        Rational s = sit == source.coeffs.end() ? Rational(0) : sit->second;
        if (nonneg.count(v)) {
            // need lambda*s >= t
            if (s > 0) {
                tighten_lo(t / s);
            } else if (s < 0) {
                tighten_hi(t / s);
            } else if (t > 0) {
                return false;
            }
        } else {
            // need lambda*s == t exactly
            if (s == 0) {
                if (t != 0) return false;
            } else {
                Rational pinned = t / s;
                if (pinned <= 0) return false;
                tighten_lo(pinned);
                tighten_hi(pinned);
            }
        }
    }
    // need lambda*source.rhs <= target.rhs
    if (source.rhs > 0) {
        tighten_hi(target.rhs / source.rhs);
    } else if (source.rhs < 0) {
        tighten_lo(target.rhs / source.rhs);
    } else if (target.rhs < 0) {
        return false;
    }

    if (lo && hi && *lo > *hi) return false;
    if (hi && *hi <= 0) return false;
    return true;
}

std::set<VarId> nonneg_vars(const std::vector<LinearConstraint>& rows) {
    std::set<VarId> out;
    for (const auto& r : rows) {
        if (r.rel == Relation::LessEq && r.coeffs.size() == 1 && r.rhs <= 0 &&
            r.coeffs.begin()->second == -1) {
            out.insert(r.coeffs.begin()->first);
        }
    }
    return out;
}

}  // namespace

InequalitySystem prune(const InequalitySystem& sys, PruneMode mode,
                       std::vector<PrunedRow>& pruned) {
    // Syntactic pass with recording (mirrors canonicalize).
    InequalitySystem out;
    out.vars = sys.vars;
    std::vector<LinearConstraint> rows;
    for (const auto& c : sys.constraints) {
        LinearConstraint n = normalize(c);
        if (trivially_false(n)) {
            throw InfeasibleConstantError("contradictory constant constraint: " + to_string(c));
        }
        if (trivially_true(n)) {
            pruned.push_back({n, "tautology"});
            continue;
        }
        rows.push_back(std::move(n));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<LinearConstraint> unique_rows;
    for (auto& r : rows) {
        if (!unique_rows.empty() && unique_rows.back() == r) {
            pruned.push_back({r, "duplicate"});
        } else {
            unique_rows.push_back(std::move(r));
        }
    }
    rows = std::move(unique_rows);
    if (mode == PruneMode::Syntactic) {
        out.constraints = std::move(rows);
        return out;
    }

    // Pairwise pass.
    std::vector<bool> removed(rows.size(), false);
    const std::set<VarId> nonneg = nonneg_vars(rows);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows.size(); ++j) {
            if (i == j || removed[j]) continue;
            if (dominated_by(rows[i], rows[j], nonneg)) {
                removed[i] = true;
                pruned.push_back({rows[i], "dominated"});
                break;
            }
        }
    }
    std::vector<LinearConstraint> kept;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!removed[i]) kept.push_back(rows[i]);
    }
    rows = std::move(kept);
    if (mode == PruneMode::Pairwise) {
        out.constraints = std::move(rows);
        return out;
    }

    // Full pass: drop every row implied by the remaining ones.
    {
        InequalitySystem probe;
        probe.vars = sys.vars;
        probe.constraints = rows;
        if (std::holds_alternative<geometry::InfeasibleEvidence>(geometry::feasible(probe))) {
            throw InfeasibleError("prune(full) requires a feasible system");
        }
    }
    std::vector<bool> gone(rows.size(), false);
    for (size_t i = 0; i < rows.size(); ++i) {
        InequalitySystem premises;
        premises.vars = sys.vars;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j != i && !gone[j]) premises.constraints.push_back(rows[j]);
        }
        if (geometry::implies(premises, rows[i])) {
            gone[i] = true;
            pruned.push_back({rows[i], "implied"});
        }
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!gone[i]) out.constraints.push_back(rows[i]);
    }
    return out;
}

InequalitySystem prune(const InequalitySystem& sys, PruneMode mode) {
    std::vector<PrunedRow> ignored;
    return prune(sys, mode, ignored);
}

InequalitySystem project(const InequalitySystem& sys, const std::vector<VarId>& eliminate_vars,
                         PruneMode mode, EliminationTrace* trace) {
    InequalitySystem current = canonicalize(sys);
    for (const auto& var : eliminate_vars) {
        if (!current.has_var(var)) {
            throw Error("cannot eliminate " + to_string(var) + ": not a system variable");
        }
        // An equality mentioning the variable is removed by substitution.
        auto eq_it = std::find_if(current.constraints.begin(), current.constraints.end(),
                                  [&](const LinearConstraint& c) {
                                      return c.rel == Relation::Eq && c.coeffs.count(var);
                                  });
        EliminationStep step;
        if (eq_it != current.constraints.end()) {
            step.eliminated = var;
            step.by_substitution = true;
            step.equality = *eq_it;
            current = substitute_equality(current, *eq_it, var);
        } else {
            current = eliminate(current, var, step);
        }
        current = prune(current, mode, step.pruned);
        if (trace) trace->steps.push_back(std::move(step));
    }
    return canonicalize(current);
}

LinearConstraint replay_produced(const EliminationStep& step, const ProducedRow& row,
                                 const VarId& var) {
    const auto& neg = step.negative.at(row.negative_parent);
    const auto& pos = step.positive.at(row.positive_parent);
    const Rational a = neg.coeffs.at(var);
    const Rational b = pos.coeffs.at(var);
    LinearConstraint combined;
    combined.rel = Relation::LessEq;
    combined.rhs = b * neg.rhs + (-a) * pos.rhs;
    for (const auto& [v, coeff] : neg.coeffs) combined.coeffs[v] += b * coeff;
    for (const auto& [v, coeff] : pos.coeffs) combined.coeffs[v] += (-a) * coeff;
    std::erase_if(combined.coeffs, [](const auto& e) { return e.second == 0; });
    return normalize(combined);
}

}  // namespace dofrs::fme
