#pragma once

#include "dofrs/rational.hpp"

#include <random>
#include <vector>

namespace dofrs::model {

/// CSIT quality levels alpha_1 >= ... >= alpha_K, each in [0,1]. Unsorted
/// input is sorted internally; `permutation[i]` records the original
/// (1-based) position of sorted entry i+1 so results can be reported in the
/// caller's indexing.
struct CsitProfile {
    std::vector<Rational> alphas;  // sorted non-increasing
    std::vector<int> permutation;  // sorted slot -> original 1-based index

    int users() const { return static_cast<int>(alphas.size()); }
    bool was_sorted() const;

    /// alpha(S) = sum over the sorted 1-based indices in S.
    Rational alpha_sum(const std::vector<int>& sorted_indices) const;
};

/// Validates entries (K >= 1, each in [0,1]) and sorts. Throws ParseError
/// on an invalid profile.
CsitProfile make_profile(std::vector<Rational> raw);

CsitProfile parse_profile(std::string_view comma_separated);

/// Uniform random profile with denominators bounded by max_denominator,
/// sorted non-increasing.
CsitProfile random_profile(int users, std::mt19937_64& rng, int max_denominator = 1000);

}  // namespace dofrs::model
