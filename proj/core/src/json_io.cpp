#include "dofrs/json_io.hpp"

#include "dofrs/errors.hpp"

#include <algorithm>

namespace dofrs {

namespace {

const Json& expect(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing JSON field '") + key + "'");
    return *it;
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

Json to_json(const LinearConstraint& c) {
    Json coeffs = Json::object();
    for (const auto& [v, coeff] : c.coeffs) coeffs[to_string(v)] = to_string(coeff);
    return Json{{"coeffs", std::move(coeffs)},
                {"rel", c.rel == Relation::Eq ? "=" : "<="},
                {"rhs", to_string(c.rhs)}};
}

Json to_json(const InequalitySystem& sys) {
    Json vars = Json::array();
    for (const auto& v : sys.vars) vars.push_back(to_string(v));
    Json constraints = Json::array();
    for (const auto& c : sys.constraints) constraints.push_back(to_json(c));
    return Json{{"vars", std::move(vars)}, {"constraints", std::move(constraints)}};
}

Json to_json(const Assignment& point) {
    Json j = Json::object();
    for (const auto& [v, value] : point) j[to_string(v)] = to_string(value);
    return j;
}

LinearConstraint constraint_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("constraint must be a JSON object");
    LinearConstraint c;
    const Json& coeffs = expect(j, "coeffs");
    if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
    for (const auto& [name, value] : coeffs.items()) {
        Rational r = parse_rational(expect_string(value, "coefficient"));
        if (r != 0) c.coeffs[parse_var(name)] = std::move(r);
    }
    std::string rel = expect_string(expect(j, "rel"), "'rel'");
    if (rel == "<=") {
        c.rel = Relation::LessEq;
    } else if (rel == "=") {
        c.rel = Relation::Eq;
    } else {
        throw ParseError("unknown relation '" + rel + "' (expected \"<=\" or \"=\")");
    }
    c.rhs = parse_rational(expect_string(expect(j, "rhs"), "'rhs'"));
    return c;
}

InequalitySystem system_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("system must be a JSON object");
    const Json& vars = expect(j, "vars");
    if (!vars.is_array()) throw ParseError("'vars' must be an array");
    std::vector<VarId> ids;
    for (const auto& name : vars) ids.push_back(parse_var(expect_string(name, "variable name")));
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        throw ParseError("duplicate variable in 'vars'");
    }
    InequalitySystem sys;
    sys.vars = std::move(ids);
    const Json& constraints = expect(j, "constraints");
    if (!constraints.is_array()) throw ParseError("'constraints' must be an array");
    for (const auto& cj : constraints) {
        LinearConstraint c = constraint_from_json(cj);
        for (const auto& [v, coeff] : c.coeffs) {
            if (!sys.has_var(v)) {
                throw ParseError("constraint uses " + to_string(v) + " outside 'vars'");
            }
        }
        sys.constraints.push_back(std::move(c));
    }
    return sys;
}

Assignment assignment_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("assignment must be a JSON object");
    Assignment a;
    for (const auto& [name, value] : j.items()) {
        a[parse_var(name)] = parse_rational(expect_string(value, "assignment value"));
    }
    return a;
}

InequalitySystem parse_system_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return system_from_json(j);
}

std::string dump_system(const InequalitySystem& sys) {
    return to_json(sys).dump(2) + "\n";
}

Json to_json(const fme::EliminationStep& step) {
    Json j;
    j["eliminated"] = to_string(step.eliminated);
    j["kind"] = step.by_substitution ? "substitution" : "fme";
    if (step.by_substitution) {
        j["equality"] = to_json(*step.equality);
    } else {
        Json groups;
        Json absent = Json::array();
        for (const auto& c : step.absent) absent.push_back(to_json(c));
        Json negative = Json::array();
        for (const auto& c : step.negative) negative.push_back(to_json(c));
        Json positive = Json::array();
        for (const auto& c : step.positive) positive.push_back(to_json(c));
        groups["absent"] = std::move(absent);
        groups["negative"] = std::move(negative);
        groups["positive"] = std::move(positive);
        j["groups"] = std::move(groups);
        Json produced = Json::array();
        for (const auto& p : step.produced) {
            produced.push_back(Json{{"constraint", to_json(p.constraint)},
                                    {"negative_parent", p.negative_parent},
                                    {"positive_parent", p.positive_parent}});
        }
        j["produced"] = std::move(produced);
    }
    Json pruned = Json::array();
    for (const auto& p : step.pruned) {
        pruned.push_back(Json{{"constraint", to_json(p.constraint)}, {"reason", p.reason}});
    }
    j["pruned"] = std::move(pruned);
    return j;
}

Json to_json(const fme::EliminationTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) steps.push_back(to_json(s));
    return Json{{"steps", std::move(steps)}};
}

Json to_json(const geometry::FarkasCertificate& cert) {
    Json multipliers = Json::object();
    for (const auto& [idx, lambda] : cert.multipliers) {
        multipliers[std::to_string(idx)] = to_string(lambda);
    }
    return Json{{"multipliers", std::move(multipliers)}, {"slack", to_string(cert.slack)}};
}

Json to_json(const geometry::InfeasibleEvidence& ev) {
    Json multipliers = Json::object();
    for (const auto& [idx, lambda] : ev.multipliers) {
        multipliers[std::to_string(idx)] = to_string(lambda);
    }
    return Json{{"multipliers", std::move(multipliers)},
                {"negative_rhs", to_string(ev.negative_rhs)}};
}

Json to_json(const geometry::EquivalenceResult& result) {
    if (std::holds_alternative<geometry::EquivalenceCertificate>(result)) {
        const auto& cert = std::get<geometry::EquivalenceCertificate>(result);
        Json a_from_b = Json::array();
        for (const auto& c : cert.a_rows_from_b) a_from_b.push_back(to_json(c));
        Json b_from_a = Json::array();
        for (const auto& c : cert.b_rows_from_a) b_from_a.push_back(to_json(c));
        return Json{{"type", "certificate"},
                    {"canonical_match", cert.canonical_match},
                    {"minimal_a", to_json(cert.minimal_a)},
                    {"minimal_b", to_json(cert.minimal_b)},
                    {"a_rows_from_b", std::move(a_from_b)},
                    {"b_rows_from_a", std::move(b_from_a)}};
    }
    const auto& cx = std::get<geometry::EquivalenceCounterexample>(result);
    return Json{{"type", "counterexample"},
                {"point", to_json(cx.point)},
                {"in_a", cx.in_a},
                {"violated", to_json(cx.violated)}};
}

Json to_json(const geometry::VertexSet& vs) {
    Json vertices = Json::array();
    for (const auto& v : vs.vertices) {
        vertices.push_back(Json{{"point", to_json(v.point)}, {"active", v.active}});
    }
    return Json{{"system", to_json(vs.canonical)}, {"vertices", std::move(vertices)}};
}

Json to_json(const model::SynthesisResult& result) {
    if (std::holds_alternative<model::Strategy>(result)) {
        const auto& s = std::get<model::Strategy>(result);
        Json dp = Json::array();
        for (const auto& r : s.d_private) dp.push_back(to_string(r));
        Json dc = Json::array();
        for (const auto& r : s.d_common) dc.push_back(to_string(r));
        return Json{{"achievable", true},
                    {"a", to_string(s.a)},
                    {"d_private", std::move(dp)},
                    {"d_common", std::move(dc)}};
    }
    const auto& na = std::get<model::NotAchievable>(result);
    return Json{{"achievable", false}, {"violated_row", to_json(na.violated_row)}};
}

}  // namespace dofrs
