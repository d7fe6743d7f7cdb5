#include "dofrs/profile.hpp"

#include "dofrs/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dofrs::model {

bool CsitProfile::was_sorted() const {
    for (size_t i = 0; i < permutation.size(); ++i) {
        if (permutation[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Rational CsitProfile::alpha_sum(const std::vector<int>& sorted_indices) const {
    Rational sum = 0;
    for (int i : sorted_indices) {
        if (i < 1 || i > users()) throw IndexOutOfRangeError("alpha index out of range");
        sum += alphas[i - 1];
    }
    return sum;
}

CsitProfile make_profile(std::vector<Rational> raw) {
    if (raw.empty()) throw ParseError("a CSIT profile needs at least one user");
    for (const auto& a : raw) {
        if (a < 0 || a > 1) {
            throw ParseError("CSIT level " + to_string(a) + " outside [0,1]");
        }
    }
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return raw[x] > raw[y]; });

    CsitProfile p;
    p.alphas.reserve(raw.size());
    p.permutation.reserve(raw.size());
    for (int idx : order) {
        p.alphas.push_back(raw[idx]);
        p.permutation.push_back(idx + 1);
    }
    return p;
}

CsitProfile parse_profile(std::string_view comma_separated) {
    return make_profile(parse_rational_list(comma_separated));
}

CsitProfile random_profile(int users, std::mt19937_64& rng, int max_denominator) {
    std::uniform_int_distribution<int> den_dist(1, max_denominator);
    std::vector<Rational> raw;
    raw.reserve(users);
    for (int i = 0; i < users; ++i) {
        int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(0, den);
        raw.emplace_back(num_dist(rng), den);
    }
    // Presented sorted, so the caller's indexing is the sorted indexing.
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return make_profile(std::move(raw));
}

}  // namespace dofrs::model
