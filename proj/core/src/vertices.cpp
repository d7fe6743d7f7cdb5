#include "dofrs/vertices.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/lp.hpp"

#include <algorithm>
#include <set>

namespace dofrs::geometry {

namespace {

using Row = std::vector<Rational>;  // n coefficients then the rhs

// Detects a nonzero recession direction r with A r <= 0 (and E r = 0),
// probing each +/- coordinate over the cone intersected with a unit box.
void check_bounded(const InequalitySystem& canon) {
    InequalitySystem cone;
    cone.vars = canon.vars;
    for (const auto& c : canon.constraints) {
        LinearConstraint h = c;
        h.rhs = 0;
        cone.constraints.push_back(std::move(h));
    }
    for (const auto& v : canon.vars) {
        LinearConstraint hi, lo;
        hi.coeffs[v] = 1;
        hi.rhs = 1;
        lo.coeffs[v] = -1;
        lo.rhs = 1;
        cone.constraints.push_back(std::move(hi));
        cone.constraints.push_back(std::move(lo));
    }
    for (const auto& v : canon.vars) {
        for (int sign : {1, -1}) {
            Optimum opt = maximize(cone, {{v, Rational(sign)}});
            if (opt.value > 0) {
                throw UnboundedError("recession direction with nonzero " + to_string(v));
            }
        }
    }
}

struct Enumerator {
    const std::vector<Row>& rows;
    int n;
    std::vector<int> pivot_col;      // per chosen row
    std::vector<Row> reduced;        // Gauss-Jordan reduced chosen rows
    std::vector<int> chosen;
    std::set<std::vector<Rational>> seen;
    std::vector<std::pair<std::vector<Rational>, std::vector<int>>> found;

    void run() { recurse(0); }

    void recurse(int start) {
        if (static_cast<int>(chosen.size()) == n) {
            emit();
            return;
        }
        int need = n - static_cast<int>(chosen.size());
        for (int idx = start; idx + need <= static_cast<int>(rows.size()); ++idx) {
            if (try_add(rows[idx])) {
                chosen.push_back(idx);
                recurse(idx + 1);
                chosen.pop_back();
                reduced.pop_back();
                pivot_col.pop_back();
            }
        }
    }

    // Reduces the candidate against the current rows; keeps it only when it
    // raises the rank. Existing rows are cleared on the new pivot column.
    bool try_add(const Row& candidate) {
        Row r = candidate;
        for (size_t k = 0; k < reduced.size(); ++k) {
            const Rational& f = r[pivot_col[k]];
            if (f == 0) continue;
            Rational factor = f;  // reduced rows have unit pivots
            for (int j = 0; j <= n; ++j) {
                if (reduced[k][j] != 0) r[j] -= factor * reduced[k][j];
            }
        }
        int pivot = -1;
        for (int j = 0; j < n; ++j) {
            if (r[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) return false;
        const Rational pv = r[pivot];
        for (int j = 0; j <= n; ++j) {
            if (r[j] != 0) r[j] /= pv;
        }
        for (size_t k = 0; k < reduced.size(); ++k) {
            const Rational f = reduced[k][pivot];
            if (f == 0) continue;
            for (int j = 0; j <= n; ++j) {
                if (r[j] != 0) reduced[k][j] -= f * r[j];
            }
        }
        pivot_col.push_back(pivot);
        reduced.push_back(std::move(r));
        return true;
    }

    void emit() {
        std::vector<Rational> point(n);
        for (size_t k = 0; k < reduced.size(); ++k) point[pivot_col[k]] = reduced[k][n];

        std::vector<int> active;
        for (size_t i = 0; i < rows.size(); ++i) {
            Rational lhs = 0;
            for (int j = 0; j < n; ++j) {
                if (rows[i][j] != 0) lhs += rows[i][j] * point[j];
            }
            if (lhs == rows[i][n]) {
                active.push_back(static_cast<int>(i));
            } else if (lhs > rows[i][n]) {
                return;  // infeasible candidate
            }
        }
        if (seen.insert(point).second) found.emplace_back(std::move(point), std::move(active));
    }
};

}  // namespace

VertexSet enumerate_vertices(const InequalitySystem& sys) {
    VertexSet out;
    out.canonical = canonicalize(sys);
    const int n = static_cast<int>(out.canonical.vars.size());

    if (std::holds_alternative<InfeasibleEvidence>(feasible(out.canonical))) return out;
    check_bounded(out.canonical);

    if (n == 0) {
        out.vertices.push_back(Vertex{{}, {}});
        return out;
    }

    // Equality rows enter the search like inequality rows: they are checked
    // for exact satisfaction at every candidate point.
    std::vector<Row> rows;
    rows.reserve(out.canonical.constraints.size());
    for (const auto& c : out.canonical.constraints) {
        Row r(n + 1, Rational(0));
        for (const auto& [v, coeff] : c.coeffs) r[out.canonical.var_position(v)] = coeff;
        r[n] = c.rhs;
        rows.push_back(std::move(r));
    }
    // An equality row fails the <= check only in one direction; handle the
    // other direction by also rejecting points that leave it slack.
    // emit() treats each row as <=; append the mirrored row of every
    // equality so both senses are enforced.
    size_t plain = rows.size();
    for (size_t i = 0; i < plain; ++i) {
        if (out.canonical.constraints[i].rel == Relation::Eq) {
            Row mirror(n + 1);
            for (int j = 0; j <= n; ++j) mirror[j] = -rows[i][j];
            rows.push_back(std::move(mirror));
        }
    }

    Enumerator en{rows, n, {}, {}, {}, {}, {}};
    en.run();
    std::sort(en.found.begin(), en.found.end());
    for (auto& [coords, active] : en.found) {
        Vertex v;
        for (int j = 0; j < n; ++j) v.point[out.canonical.vars[j]] = coords[j];
        // Active indices must refer to the canonical constraint list only.
        std::vector<int> trimmed;
        for (int idx : active) {
            if (idx < static_cast<int>(plain)) trimmed.push_back(idx);
        }
        v.active = std::move(trimmed);
        out.vertices.push_back(std::move(v));
    }
    return out;
}

}  // namespace dofrs::geometry
