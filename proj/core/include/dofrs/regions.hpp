#pragma once

#include "dofrs/profile.hpp"
#include "dofrs/system.hpp"

namespace dofrs::model {

// All builders work in the sorted index space of the profile (alpha_1 the
// strongest user). rename_indices() with profile.permutation maps results
// back to the caller's original indexing.

/// Optimal DoF region over d_1..d_K: one row d(S) <= 1 + alpha(S \ {min S})
/// per nonempty subset S, plus nonnegativity. Canonicalized; subset rows may
/// be redundant (prune(Full) minimizes).
InequalitySystem outer_bound(const CsitProfile& profile);

/// Single-power rate-splitting region over (d, dp, dc, a): d_i = dp_i + dc_i,
/// dp_i <= min{a, alpha_i} as two rows, sum dc <= 1 - a, 0 <= a <= 1, and all
/// nonnegativity rows.
InequalitySystem rs_region_single_power(const CsitProfile& profile);

/// The region after substituting dp_i = d_i - dc_i, over (d, dc, a).
InequalitySystem rs_after_private_elim(const CsitProfile& profile);

/// The region after imposing sum dc = 1 - a and substituting a, over (d, dc):
/// d_i - dc_i <= alpha_i, -dc_i <= 0, d_i + dc(K\{i}) <= 1, dc(K) <= 1, plus
/// -d_i <= 0.
InequalitySystem rs_after_power_elim(const CsitProfile& profile);

/// Closed-form induction family after k elimination steps, 0 <= k <= K-1,
/// over (d, dc_{k+1}..dc_K); k = 0 is the rs_after_power_elim region. The
/// empty subset contributes rows with alpha(empty) = 0; full pruning removes
/// the redundant ones. Throws IndexOutOfRangeError.
InequalitySystem expected_intermediate(const CsitProfile& profile, int k);

/// The same family as a direct transcription: canonicalized but not pruned,
/// so the redundant empty-subset rows survive. This is what the elimination
/// trace is compared against step by step.
InequalitySystem expected_intermediate_literal(const CsitProfile& profile, int k);

/// Exact cap on dp_i in the K-power-variable region:
/// (a_i - (max_{j != i} a_j - alpha_i)^+)^+. Requires K >= 2, 1 <= i <= K.
Rational private_dof_cap_full(const std::vector<Rational>& a_vec, const CsitProfile& profile,
                              int i);

struct AlphaDropCheck {
    Rational lhs;  // alpha(S + {extra} - {min S})
    Rational rhs;  // alpha(S)
    bool holds;    // lhs <= rhs: the redundancy condition
};

/// The alpha-arithmetic redundancy lemma: swapping the strongest member of S
/// for a weaker index never increases alpha(S). S holds sorted 1-based
/// indices; extra must exceed max(S). Throws EmptySetError,
/// IndexOutOfRangeError.
AlphaDropCheck alpha_drop_min(const CsitProfile& profile, const std::vector<int>& S, int extra);

/// Closed-form sum-DoF: 1 + alpha_2 + ... + alpha_K.
Rational sum_dof(const CsitProfile& profile);

/// All subsets of {lo, ..., hi} (including the empty set) as sorted index
/// lists, in bitmask order. Empty range yields just the empty set.
std::vector<std::vector<int>> subsets_of_range(int lo, int hi);

}  // namespace dofrs::model
