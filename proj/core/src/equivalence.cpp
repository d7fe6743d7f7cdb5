#include "dofrs/equivalence.hpp"

#include "dofrs/errors.hpp"
#include "dofrs/fme.hpp"

namespace dofrs::geometry {

namespace {

// Certifies every row of `targets` from `premises`; fills certs or returns
// the first counterexample.
std::optional<EquivalenceCounterexample> include(const InequalitySystem& premises,
                                                 const InequalitySystem& targets,
                                                 bool premises_are_a,
                                                 std::vector<FarkasCertificate>& certs) {
    for (const auto& row : targets.constraints) {
        ImplicationResult r = is_implied(premises, row);
        if (std::holds_alternative<NotImplied>(r)) {
            EquivalenceCounterexample cx;
            cx.point = std::move(std::get<NotImplied>(r).counterexample);
            cx.in_a = premises_are_a;
            cx.violated = row;
            return cx;
        }
        certs.push_back(std::move(std::get<FarkasCertificate>(r)));
    }
    return std::nullopt;
}

}  // namespace

EquivalenceResult equivalent(const InequalitySystem& a, const InequalitySystem& b) {
    if (a.vars != b.vars) {
        throw Error("equivalent: systems are defined over different variable spaces");
    }
    const InequalitySystem ca = canonicalize(a);
    const InequalitySystem cb = canonicalize(b);
    const InequalitySystem sa = split_equalities(ca);
    const InequalitySystem sb = split_equalities(cb);

    EquivalenceCertificate cert;
    if (auto cx = include(cb, sa, /*premises_are_a=*/false, cert.a_rows_from_b)) return *cx;
    if (auto cx = include(ca, sb, /*premises_are_a=*/true, cert.b_rows_from_a)) return *cx;

    cert.minimal_a = fme::prune(ca, fme::PruneMode::Full);
    cert.minimal_b = fme::prune(cb, fme::PruneMode::Full);
    cert.canonical_match = cert.minimal_a.constraints == cert.minimal_b.constraints;
    return cert;
}

bool is_equivalent(const EquivalenceResult& r) {
    if (!std::holds_alternative<EquivalenceCertificate>(r)) return false;
    return std::get<EquivalenceCertificate>(r).canonical_match;
}

}  // namespace dofrs::geometry
