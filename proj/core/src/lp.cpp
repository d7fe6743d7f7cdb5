#include "dofrs/lp.hpp"

#include "dofrs/errors.hpp"

#include <algorithm>
#include <cassert>

// All optimization entry points reduce to one exact standard-form simplex:
//
//     minimize cost.y   subject to   M y = q,  y >= 0
//
// For a primal question "maximize obj.x over A x <= b (x free)" we solve its
// dual: minimize b.y subject to A^T y = obj, y >= 0. The dual solution gives
// the Farkas multipliers directly, and the simplex multipliers (duals of the
// standard rows) recover the primal point. Bland's rule keeps every pivot
// deterministic and cycle-free; arithmetic is exact throughout.

namespace dofrs::geometry {

namespace {

enum class StdStatus { Optimal, Infeasible, Unbounded };

struct StdSolution {
    StdStatus status = StdStatus::Optimal;
    Rational objective = 0;
    std::vector<Rational> y;      // standard-form solution, length = #cols
    std::vector<Rational> duals;  // pi, length = #rows
    std::vector<Rational> ray;    // M ray = 0, ray >= 0, cost.ray < 0
};

class SimplexTableau {
  public:
    SimplexTableau(std::vector<std::vector<Rational>> m, std::vector<Rational> q,
                   std::vector<Rational> cost)
        : rows_(static_cast<int>(q.size())),
          real_cols_(static_cast<int>(cost.size())),
          rhs_col_(real_cols_ + rows_),
          cost_(std::move(cost)) {
        tableau_.assign(rows_, std::vector<Rational>(rhs_col_ + 1, Rational(0)));
        basis_.resize(rows_);
        for (int i = 0; i < rows_; ++i) {
            bool flip = q[i] < 0;
            for (int j = 0; j < real_cols_; ++j) {
                tableau_[i][j] = flip ? -m[i][j] : m[i][j];
            }
            tableau_[i][real_cols_ + i] = 1;
            tableau_[i][rhs_col_] = flip ? -q[i] : q[i];
            basis_[i] = real_cols_ + i;
        }
    }

    StdSolution solve() {
        // Phase 1: minimize the artificial sum.
        zrow_.assign(rhs_col_ + 1, Rational(0));
        for (int j = 0; j <= rhs_col_; ++j) {
            Rational colsum = 0;
            for (int i = 0; i < rows_; ++i) colsum += tableau_[i][j];
            if (j >= real_cols_ && j < rhs_col_) {
                zrow_[j] = Rational(1) - colsum;
            } else {
                zrow_[j] = -colsum;
            }
        }
        run_phase();
        if (-zrow_[rhs_col_] > 0) {
            StdSolution out;
            out.status = StdStatus::Infeasible;
            return out;
        }
        drive_out_artificials();

        // Phase 2 with the real costs; artificial columns keep cost 0 and
        // never re-enter, so their reduced costs expose -pi.
        zrow_.assign(rhs_col_ + 1, Rational(0));
        for (int j = 0; j < real_cols_; ++j) zrow_[j] = cost_[j];
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] >= real_cols_) continue;  // artificial basic (cost 0)
            const Rational& cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= rhs_col_; ++j) zrow_[j] -= cb * tableau_[i][j];
        }
        int unbounded_col = run_phase();

        StdSolution out;
        if (unbounded_col >= 0) {
            out.status = StdStatus::Unbounded;
            out.ray.assign(real_cols_, Rational(0));
            out.ray[unbounded_col] = 1;
            for (int i = 0; i < rows_; ++i) {
                if (basis_[i] < real_cols_) {
                    out.ray[basis_[i]] = -tableau_[i][unbounded_col];
                }
            }
            return out;
        }
        out.status = StdStatus::Optimal;
        out.objective = -zrow_[rhs_col_];
        out.y.assign(real_cols_, Rational(0));
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < real_cols_) out.y[basis_[i]] = tableau_[i][rhs_col_];
        }
        out.duals.resize(rows_);
        for (int i = 0; i < rows_; ++i) out.duals[i] = -zrow_[real_cols_ + i];
        return out;
    }

  private:
    // Bland's rule; only real columns may enter. Returns -1 on optimality,
    // else the entering column proving unboundedness.
    int run_phase() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < real_cols_; ++j) {
                if (zrow_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return -1;

            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < rows_; ++i) {
                const Rational& piv = tableau_[i][enter];
                if (piv <= 0) continue;
                Rational ratio = tableau_[i][rhs_col_] / piv;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return enter;
            pivot(leave, enter);
        }
    }

    // A basic artificial at level zero is exchanged for any real column with
    // a nonzero entry; rows with an all-zero real part are dependent and
    // keep their artificial (such rows never interact with later pivots).
    void drive_out_artificials() {
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < real_cols_) continue;
            for (int j = 0; j < real_cols_; ++j) {
                if (tableau_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    void pivot(int prow, int pcol) {
        auto& row = tableau_[prow];
        const Rational pv = row[pcol];
        for (int j = 0; j <= rhs_col_; ++j) {
            if (row[j] != 0) row[j] /= pv;
        }
        row[pcol] = 1;
        for (int r = 0; r < rows_; ++r) {
            if (r == prow) continue;
            const Rational factor = tableau_[r][pcol];
            if (factor == 0) continue;
            auto& target = tableau_[r];
            for (int j = 0; j <= rhs_col_; ++j) {
                if (row[j] != 0) target[j] -= factor * row[j];
            }
            target[pcol] = 0;
        }
        const Rational zfactor = zrow_[pcol];
        if (zfactor != 0) {
            for (int j = 0; j <= rhs_col_; ++j) {
                if (row[j] != 0) zrow_[j] -= zfactor * row[j];
            }
            zrow_[pcol] = 0;
        }
        basis_[prow] = pcol;
    }

    int rows_;
    int real_cols_;
    int rhs_col_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> zrow_;
    std::vector<int> basis_;
};

struct DualFormResult {
    enum class Kind {
        Optimal,           // finite max; point + multipliers available
        NoDualSolution,    // primal unbounded in the objective direction, or infeasible
        PrimalInfeasible,  // Farkas ray found
    };
    Kind kind = Kind::Optimal;
    Rational value = 0;
    std::vector<Rational> point;           // over vars
    std::map<int, Rational> multipliers;   // over row indices
    std::map<int, Rational> farkas;        // over row indices
    Rational farkas_rhs = 0;
};

// maximize objective.x subject to rows (all <=) over the given variables.
DualFormResult solve_ineq_max(const std::vector<LinearConstraint>& rows,
                              const std::vector<VarId>& vars,
                              const std::map<VarId, Rational>& objective) {
    const int n = static_cast<int>(vars.size());
    const int m = static_cast<int>(rows.size());

    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> q(n, Rational(0));
    std::vector<Rational> cost(m, Rational(0));
    auto var_pos = [&](const VarId& v) {
        auto it = std::lower_bound(vars.begin(), vars.end(), v);
        if (it == vars.end() || *it != v) {
            throw Error("constraint references unknown variable " + to_string(v));
        }
        return static_cast<int>(it - vars.begin());
    };
    for (int j = 0; j < m; ++j) {
        assert(rows[j].rel == Relation::LessEq);
        for (const auto& [v, coeff] : rows[j].coeffs) M[var_pos(v)][j] = coeff;
        cost[j] = rows[j].rhs;
    }
    for (const auto& [v, coeff] : objective) q[var_pos(v)] = coeff;

    StdSolution sol = SimplexTableau(std::move(M), std::move(q), std::move(cost)).solve();

    DualFormResult out;
    switch (sol.status) {
        case StdStatus::Infeasible:
            out.kind = DualFormResult::Kind::NoDualSolution;
            return out;
        case StdStatus::Unbounded: {
            out.kind = DualFormResult::Kind::PrimalInfeasible;
            for (int j = 0; j < m; ++j) {
                if (sol.ray[j] != 0) out.farkas[j] = sol.ray[j];
                out.farkas_rhs += sol.ray[j] * rows[j].rhs;
            }
            return out;
        }
        case StdStatus::Optimal: {
            out.kind = DualFormResult::Kind::Optimal;
            out.value = sol.objective;
            out.point = std::move(sol.duals);
            for (int j = 0; j < m; ++j) {
                if (sol.y[j] != 0) out.multipliers[j] = sol.y[j];
            }
            return out;
        }
    }
    return out;
}

Assignment to_assignment(const std::vector<VarId>& vars, const std::vector<Rational>& values) {
    Assignment a;
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[i];
    return a;
}

std::vector<VarId> union_vars(const InequalitySystem& sys, const LinearConstraint& extra) {
    std::vector<VarId> vars = sys.vars;
    for (const auto& [v, c] : extra.coeffs) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

}  // namespace

bool verify_certificate(const InequalitySystem& premises, const LinearConstraint& target,
                        const FarkasCertificate& cert) {
    if (target.rel != Relation::LessEq) return false;
    std::map<VarId, Rational> weighted;
    Rational weighted_rhs = 0;
    for (const auto& [idx, lambda] : cert.multipliers) {
        if (lambda < 0) return false;
        if (idx < 0 || idx >= static_cast<int>(premises.constraints.size())) return false;
        const auto& row = premises.constraints[idx];
        for (const auto& [v, coeff] : row.coeffs) weighted[v] += lambda * coeff;
        weighted_rhs += lambda * row.rhs;
    }
    std::erase_if(weighted, [](const auto& e) { return e.second == 0; });
    if (weighted != target.coeffs) return false;
    if (cert.slack < 0) return false;
    return weighted_rhs + cert.slack == target.rhs;
}

bool verify_infeasibility(const InequalitySystem& premises, const InfeasibleEvidence& ev) {
    if (ev.negative_rhs >= 0) return false;
    std::map<VarId, Rational> weighted;
    Rational weighted_rhs = 0;
    for (const auto& [idx, lambda] : ev.multipliers) {
        if (lambda < 0) return false;
        if (idx < 0 || idx >= static_cast<int>(premises.constraints.size())) return false;
        const auto& row = premises.constraints[idx];
        if (row.rel != Relation::LessEq) return false;
        for (const auto& [v, coeff] : row.coeffs) weighted[v] += lambda * coeff;
        weighted_rhs += lambda * row.rhs;
    }
    std::erase_if(weighted, [](const auto& e) { return e.second == 0; });
    return weighted.empty() && weighted_rhs == ev.negative_rhs;
}

InequalitySystem split_equalities(const InequalitySystem& sys) {
    InequalitySystem out;
    out.vars = sys.vars;
    for (const auto& c : sys.constraints) {
        if (c.rel == Relation::LessEq) {
            out.constraints.push_back(c);
            continue;
        }
        LinearConstraint le = c;
        le.rel = Relation::LessEq;
        out.constraints.push_back(le);
        LinearConstraint ge;
        ge.rel = Relation::LessEq;
        ge.rhs = -c.rhs;
        for (const auto& [v, coeff] : c.coeffs) ge.coeffs[v] = -coeff;
        out.constraints.push_back(std::move(ge));
    }
    return out;
}

InequalitySystem with_fixed(const InequalitySystem& sys, const Assignment& fixed) {
    InequalitySystem out = sys;
    for (const auto& [v, value] : fixed) {
        if (!sys.has_var(v)) {
            throw Error("fixed variable " + to_string(v) + " is not a system variable");
        }
        LinearConstraint pin;
        pin.rel = Relation::Eq;
        pin.coeffs[v] = 1;
        pin.rhs = value;
        out.constraints.push_back(std::move(pin));
    }
    return out;
}

FeasibilityResult feasible(const InequalitySystem& sys, const Assignment& fixed) {
    InequalitySystem split = split_equalities(with_fixed(sys, fixed));
    DualFormResult res = solve_ineq_max(split.constraints, split.vars, {});
    switch (res.kind) {
        case DualFormResult::Kind::Optimal:
            return to_assignment(split.vars, res.point);
        case DualFormResult::Kind::PrimalInfeasible: {
            InfeasibleEvidence ev;
            ev.multipliers = std::move(res.farkas);
            ev.negative_rhs = std::move(res.farkas_rhs);
            return ev;
        }
        case DualFormResult::Kind::NoDualSolution:
            break;
    }
    throw Error("feasibility dual cannot be infeasible");  // y = 0 always solves it
}

Optimum maximize(const InequalitySystem& sys, const std::map<VarId, Rational>& objective) {
    InequalitySystem split = split_equalities(sys);
    DualFormResult res = solve_ineq_max(split.constraints, split.vars, objective);
    if (res.kind == DualFormResult::Kind::PrimalInfeasible) {
        throw InfeasibleError("maximize: system is infeasible");
    }
    if (res.kind == DualFormResult::Kind::NoDualSolution) {
        if (std::holds_alternative<Assignment>(feasible(sys))) {
            throw UnboundedError("maximize: objective unbounded above");
        }
        throw InfeasibleError("maximize: system is infeasible");
    }

    // Lexicographic refinement over the optimal face for a deterministic,
    // smallest argmax. Stops early if the face is unbounded below in some
    // coordinate (no lexicographic minimum exists then).
    std::vector<LinearConstraint> face = split.constraints;
    LinearConstraint level_le, level_ge;
    for (const auto& [v, c] : objective) {
        if (c != 0) {
            level_le.coeffs[v] = c;
            level_ge.coeffs[v] = -c;
        }
    }
    level_le.rhs = res.value;
    level_ge.rhs = -res.value;
    face.push_back(level_le);
    face.push_back(level_ge);

    std::vector<Rational> point = res.point;
    for (size_t vi = 0; vi < split.vars.size(); ++vi) {
        std::map<VarId, Rational> negate{{split.vars[vi], Rational(-1)}};
        DualFormResult r = solve_ineq_max(face, split.vars, negate);
        if (r.kind != DualFormResult::Kind::Optimal) break;
        Rational low = -r.value;
        LinearConstraint pin_le, pin_ge;
        pin_le.coeffs[split.vars[vi]] = 1;
        pin_le.rhs = low;
        pin_ge.coeffs[split.vars[vi]] = -1;
        pin_ge.rhs = -low;
        face.push_back(pin_le);
        face.push_back(pin_ge);
        point = r.point;
    }

    Optimum out;
    out.value = std::move(res.value);
    out.argmax = to_assignment(split.vars, point);
    return out;
}

ImplicationResult is_implied(const InequalitySystem& premises, const LinearConstraint& target) {
    if (target.rel != Relation::LessEq) {
        throw Error("is_implied expects an inequality target");
    }
    InequalitySystem split = split_equalities(premises);
    std::vector<VarId> vars = union_vars(split, target);

    DualFormResult res = solve_ineq_max(split.constraints, vars, target.coeffs);
    if (res.kind == DualFormResult::Kind::Optimal) {
        if (res.value <= target.rhs) {
            FarkasCertificate cert;
            cert.multipliers = std::move(res.multipliers);
            cert.slack = target.rhs - res.value;
            return cert;
        }
        return NotImplied{to_assignment(vars, res.point)};
    }
    if (res.kind == DualFormResult::Kind::PrimalInfeasible) {
        throw InfeasibleError("is_implied: premises are infeasible");
    }

    // The premise region is unbounded along the target direction. Walk to a
    // violating point by capping the objective above the threshold.
    FeasibilityResult base = feasible(premises);
    if (std::holds_alternative<InfeasibleEvidence>(base)) {
        throw InfeasibleError("is_implied: premises are infeasible");
    }
    Assignment witness = std::get<Assignment>(base);
    for (const auto& v : vars) witness.try_emplace(v, 0);
    if (target.lhs_at(witness) > target.rhs) return NotImplied{std::move(witness)};

    std::vector<LinearConstraint> capped = split.constraints;
    LinearConstraint cap;
    cap.coeffs = target.coeffs;
    cap.rhs = target.rhs + 1;
    capped.push_back(std::move(cap));
    DualFormResult res2 = solve_ineq_max(capped, vars, target.coeffs);
    if (res2.kind != DualFormResult::Kind::Optimal || res2.value <= target.rhs) {
        throw Error("capped implication probe failed unexpectedly");
    }
    return NotImplied{to_assignment(vars, res2.point)};
}

bool implies(const InequalitySystem& premises, const LinearConstraint& target) {
    if (target.rel == Relation::Eq) {
        LinearConstraint le = target;
        le.rel = Relation::LessEq;
        LinearConstraint ge;
        ge.rel = Relation::LessEq;
        ge.rhs = -target.rhs;
        for (const auto& [v, coeff] : target.coeffs) ge.coeffs[v] = -coeff;
        return implies(premises, le) && implies(premises, ge);
    }
    return std::holds_alternative<FarkasCertificate>(is_implied(premises, target));
}

}  // namespace dofrs::geometry
