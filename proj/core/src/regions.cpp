#include "dofrs/regions.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/fme.hpp"

namespace dofrs::model {

namespace {

LinearConstraint row_leq(std::map<VarId, Rational> coeffs, Rational rhs) {
    LinearConstraint c;
    c.coeffs = std::move(coeffs);
    c.rhs = std::move(rhs);
    std::erase_if(c.coeffs, [](const auto& e) { return e.second == 0; });
    return c;
}

void add_nonneg(InequalitySystem& sys, const VarId& v) {
    sys.add(row_leq({{v, Rational(-1)}}, 0));
}

}  // namespace

std::vector<std::vector<int>> subsets_of_range(int lo, int hi) {
    std::vector<std::vector<int>> out;
    int count = hi >= lo ? hi - lo + 1 : 0;
    out.reserve(std::size_t(1) << count);
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < count; ++b) {
            if (mask & (1u << b)) subset.push_back(lo + b);
        }
        out.push_back(std::move(subset));
    }
    return out;
}

InequalitySystem outer_bound(const CsitProfile& profile) {
    const int K = profile.users();
    std::vector<VarId> vars;
    for (int i = 1; i <= K; ++i) vars.push_back(dof_var(i));
    InequalitySystem sys = make_system(vars);

    for (const auto& S : subsets_of_range(1, K)) {
        if (S.empty()) continue;
        std::map<VarId, Rational> coeffs;
        for (int i : S) coeffs[dof_var(i)] = 1;
        // min S carries the largest alpha; it is the one dropped.
        std::vector<int> rest(S.begin() + 1, S.end());
        sys.add(row_leq(std::move(coeffs), Rational(1) + profile.alpha_sum(rest)));
    }
    for (int i = 1; i <= K; ++i) add_nonneg(sys, dof_var(i));
    return canonicalize(sys);
}

InequalitySystem rs_region_single_power(const CsitProfile& profile) {
    const int K = profile.users();
    std::vector<VarId> vars;
    for (int i = 1; i <= K; ++i) {
        vars.push_back(dof_var(i));
        vars.push_back(private_var(i));
        vars.push_back(common_var(i));
    }
    const VarId a = power_var();
    vars.push_back(a);
    InequalitySystem sys = make_system(vars);

    for (int i = 1; i <= K; ++i) {
        LinearConstraint split;
        split.rel = Relation::Eq;
        split.coeffs = {{dof_var(i), 1}, {private_var(i), -1}, {common_var(i), -1}};
        split.rhs = 0;
        sys.add(std::move(split));

        add_nonneg(sys, private_var(i));
        add_nonneg(sys, common_var(i));
        sys.add(row_leq({{private_var(i), 1}, {a, -1}}, 0));
        sys.add(row_leq({{private_var(i), 1}}, profile.alphas[i - 1]));
    }
    std::map<VarId, Rational> common_sum;
    for (int i = 1; i <= K; ++i) common_sum[common_var(i)] = 1;
    common_sum[a] = 1;
    sys.add(row_leq(std::move(common_sum), 1));  // sum dc_i <= 1 - a
    add_nonneg(sys, a);
    sys.add(row_leq({{a, 1}}, 1));
    for (int i = 1; i <= K; ++i) add_nonneg(sys, dof_var(i));
    return canonicalize(sys);
}

InequalitySystem rs_after_private_elim(const CsitProfile& profile) {
    const int K = profile.users();
    std::vector<VarId> vars;
    for (int i = 1; i <= K; ++i) {
        vars.push_back(dof_var(i));
        vars.push_back(common_var(i));
    }
    const VarId a = power_var();
    vars.push_back(a);
    InequalitySystem sys = make_system(vars);

    for (int i = 1; i <= K; ++i) {
        add_nonneg(sys, common_var(i));
        sys.add(row_leq({{dof_var(i), 1}, {common_var(i), -1}}, profile.alphas[i - 1]));
        sys.add(row_leq({{dof_var(i), 1}, {common_var(i), -1}, {a, -1}}, 0));
    }
    std::map<VarId, Rational> common_sum;
    for (int i = 1; i <= K; ++i) common_sum[common_var(i)] = 1;
    common_sum[a] = 1;
    sys.add(row_leq(std::move(common_sum), 1));
    add_nonneg(sys, a);
    sys.add(row_leq({{a, 1}}, 1));
    for (int i = 1; i <= K; ++i) add_nonneg(sys, dof_var(i));
    return canonicalize(sys);
}

InequalitySystem rs_after_power_elim(const CsitProfile& profile) {
    const int K = profile.users();
    std::vector<VarId> vars;
    for (int i = 1; i <= K; ++i) {
        vars.push_back(dof_var(i));
        vars.push_back(common_var(i));
    }
    InequalitySystem sys = make_system(vars);

    for (int i = 1; i <= K; ++i) {
        sys.add(row_leq({{dof_var(i), 1}, {common_var(i), -1}}, profile.alphas[i - 1]));
        add_nonneg(sys, common_var(i));
        std::map<VarId, Rational> coeffs{{dof_var(i), 1}};
        for (int j = 1; j <= K; ++j) {
            if (j != i) coeffs[common_var(j)] = 1;
        }
        sys.add(row_leq(std::move(coeffs), 1));
    }
    std::map<VarId, Rational> all_common;
    for (int j = 1; j <= K; ++j) all_common[common_var(j)] = 1;
    sys.add(row_leq(std::move(all_common), 1));
    for (int i = 1; i <= K; ++i) add_nonneg(sys, dof_var(i));
    return canonicalize(sys);
}

InequalitySystem expected_intermediate(const CsitProfile& profile, int k) {
    return fme::prune(expected_intermediate_literal(profile, k), fme::PruneMode::Full);
}

InequalitySystem expected_intermediate_literal(const CsitProfile& profile, int k) {
    const int K = profile.users();
    if (k < 0 || k > K - 1) {
        throw IndexOutOfRangeError("expected_intermediate: k must lie in [0, K-1]");
    }
    std::vector<VarId> vars;
    for (int i = 1; i <= K; ++i) vars.push_back(dof_var(i));
    for (int i = k + 1; i <= K; ++i) vars.push_back(common_var(i));
    InequalitySystem sys = make_system(vars);

    for (int i = k + 1; i <= K; ++i) {
        sys.add(row_leq({{dof_var(i), 1}, {common_var(i), -1}}, profile.alphas[i - 1]));
        add_nonneg(sys, common_var(i));
    }
    const auto subsets = subsets_of_range(1, k);
    for (const auto& S : subsets) {
        // d(S) + d_i + dc(<k+1:K> \ {i}) <= 1 + alpha(S)
        for (int i = k + 1; i <= K; ++i) {
            std::map<VarId, Rational> coeffs;
            for (int s : S) coeffs[dof_var(s)] = 1;
            coeffs[dof_var(i)] += 1;
            for (int j = k + 1; j <= K; ++j) {
                if (j != i) coeffs[common_var(j)] = 1;
            }
            sys.add(row_leq(std::move(coeffs), Rational(1) + profile.alpha_sum(S)));
        }
        // d(S) + dc(<k+1:K>) <= 1 + alpha(S \ {min S})
        std::map<VarId, Rational> coeffs;
        for (int s : S) coeffs[dof_var(s)] = 1;
        for (int j = k + 1; j <= K; ++j) coeffs[common_var(j)] = 1;
        std::vector<int> rest(S.empty() ? S : std::vector<int>(S.begin() + 1, S.end()));
        sys.add(row_leq(std::move(coeffs), Rational(1) + profile.alpha_sum(rest)));
    }
    for (int i = 1; i <= K; ++i) add_nonneg(sys, dof_var(i));
    return canonicalize(sys);
}

Rational private_dof_cap_full(const std::vector<Rational>& a_vec, const CsitProfile& profile,
                              int i) {
    const int K = profile.users();
    if (K < 2) throw IndexOutOfRangeError("private_dof_cap_full requires K >= 2");
    if (i < 1 || i > K || static_cast<int>(a_vec.size()) != K) {
        throw IndexOutOfRangeError("private_dof_cap_full: bad index or power vector size");
    }
    Rational max_other = 0;
    bool first = true;
    for (int j = 1; j <= K; ++j) {
        if (j == i) continue;
        if (first || a_vec[j - 1] > max_other) max_other = a_vec[j - 1];
        first = false;
    }
    return positive_part(a_vec[i - 1] - positive_part(max_other - profile.alphas[i - 1]));
}

AlphaDropCheck alpha_drop_min(const CsitProfile& profile, const std::vector<int>& S, int extra) {
    if (S.empty()) throw EmptySetError("alpha_drop_min: S must be nonempty");
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || extra > profile.users() || extra <= sorted.back()) {
        throw IndexOutOfRangeError("alpha_drop_min: extra must exceed max(S), all within <K>");
    }
    std::vector<int> swapped(sorted.begin() + 1, sorted.end());
    swapped.push_back(extra);

    AlphaDropCheck out;
    out.lhs = profile.alpha_sum(swapped);
    out.rhs = profile.alpha_sum(sorted);
    out.holds = out.lhs <= out.rhs;
    return out;
}

Rational sum_dof(const CsitProfile& profile) {
    Rational total = 1;
    for (int i = 2; i <= profile.users(); ++i) total += profile.alphas[i - 1];
    return total;
}

}  // namespace dofrs::model
