#include "dofrs/strategy.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/lp.hpp"
#include "dofrs/regions.hpp"

namespace dofrs::model {

SynthesisResult synthesize_strategy(const CsitProfile& profile, const std::vector<Rational>& d) {
    const int K = profile.users();
    if (static_cast<int>(d.size()) != K) {
        throw Error("synthesize_strategy: expected " + std::to_string(K) + " DoF values");
    }

    // Into sorted space: sorted slot s holds user permutation[s].
    Assignment d_point;
    for (int s = 1; s <= K; ++s) {
        d_point[dof_var(s)] = d[profile.permutation[s - 1] - 1];
    }

    const InequalitySystem outer = outer_bound(profile);
    for (const auto& row : outer.constraints) {
        if (!evaluate(row, d_point)) {
            LinearConstraint user_row = row;
            user_row.coeffs.clear();
            for (const auto& [v, coeff] : row.coeffs) {
                user_row.coeffs[{v.kind, profile.permutation[v.index - 1]}] = coeff;
            }
            return NotAchievable{normalize(user_row)};
        }
    }

    const InequalitySystem rs = rs_region_single_power(profile);
    geometry::FeasibilityResult fr = geometry::feasible(rs, d_point);
    if (!std::holds_alternative<Assignment>(fr)) {
        // The outer bound contains d, so the restricted region must too;
        // reaching this line would disprove the sandwich.
        throw Error("synthesize_strategy: single-power region infeasible at an outer-bound point");
    }
    const Assignment& witness = std::get<Assignment>(fr);

    Strategy out;
    out.a = witness.at(power_var());
    out.d_private.resize(K);
    out.d_common.resize(K);
    for (int s = 1; s <= K; ++s) {
        const int user = profile.permutation[s - 1];
        out.d_private[user - 1] = witness.at(private_var(s));
        out.d_common[user - 1] = witness.at(common_var(s));
    }
    return out;
}

}  // namespace dofrs::model
