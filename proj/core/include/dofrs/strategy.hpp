#pragma once

#include "dofrs/profile.hpp"
#include "dofrs/system.hpp"

#include <variant>

namespace dofrs::model {

/// A concrete rate-splitting operating point: one shared power exponent and
/// the private/common DoF splits, indexed in the caller's user order.
struct Strategy {
    Rational a;
    std::vector<Rational> d_private;
    std::vector<Rational> d_common;
};

struct NotAchievable {
    LinearConstraint violated_row;  // outer-bound row in the caller's indexing
};

using SynthesisResult = std::variant<Strategy, NotAchievable>;

/// Finds a strategy realizing the DoF tuple d (caller indexing) exactly, by
/// pinning d in the single-power region and solving for the rest. Returns
/// NotAchievable with a violated outer-bound row when d lies outside the
/// region.
SynthesisResult synthesize_strategy(const CsitProfile& profile, const std::vector<Rational>& d);

}  // namespace dofrs::model
