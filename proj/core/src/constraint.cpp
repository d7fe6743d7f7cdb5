#include "dofrs/constraint.hpp"

#include "dofrs/errors.hpp"

#include <sstream>

namespace dofrs {

Rational LinearConstraint::lhs_at(const Assignment& point) const {
    Rational sum = 0;
    for (const auto& [var, coeff] : coeffs) {
        auto it = point.find(var);
        if (it == point.end()) {
            throw MissingVariableError("no value for variable " + dofrs::to_string(var));
        }
        sum += coeff * it->second;
    }
    return sum;
}

bool LinearConstraint::operator==(const LinearConstraint& other) const {
    return rel == other.rel && rhs == other.rhs && coeffs == other.coeffs;
}

bool LinearConstraint::operator<(const LinearConstraint& other) const {
    auto a = coeffs.begin(), b = other.coeffs.begin();
    for (; a != coeffs.end() && b != other.coeffs.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    if (a != coeffs.end() || b != other.coeffs.end()) return b != other.coeffs.end();
    if (rel != other.rel) return rel < other.rel;
    return rhs < other.rhs;
}

LinearConstraint make_constraint(std::initializer_list<std::pair<VarId, Rational>> terms,
                                 Relation rel, Rational rhs) {
    LinearConstraint c;
    c.rel = rel;
    c.rhs = std::move(rhs);
    for (const auto& [var, coeff] : terms) {
        if (coeff != 0) c.coeffs[var] += coeff;
    }
    std::erase_if(c.coeffs, [](const auto& e) { return e.second == 0; });
    return c;
}

LinearConstraint normalize(const LinearConstraint& c) {
    LinearConstraint out = c;
    std::erase_if(out.coeffs, [](const auto& e) { return e.second == 0; });
    if (out.coeffs.empty()) return out;

    // Scale by lcm(denominators)/gcd(numerators) so coefficients become
    // coprime integers; the rhs follows the same factor.
    Integer den_lcm = 1;
    for (const auto& [var, coeff] : out.coeffs) {
        den_lcm = lcm(den_lcm, denominator(coeff));
    }
    Integer num_gcd = 0;
    for (const auto& [var, coeff] : out.coeffs) {
        num_gcd = gcd(num_gcd, Integer(numerator(coeff) * (den_lcm / denominator(coeff))));
    }
    Rational factor(den_lcm, num_gcd);  // num_gcd > 0 since some coeff != 0
    if (out.rel == Relation::Eq && out.coeffs.begin()->second < 0) factor = -factor;

    if (factor != 1) {
        for (auto& [var, coeff] : out.coeffs) coeff *= factor;
        out.rhs *= factor;
    }
    return out;
}

bool evaluate(const LinearConstraint& c, const Assignment& point) {
    Rational lhs = c.lhs_at(point);
    return c.rel == Relation::Eq ? lhs == c.rhs : lhs <= c.rhs;
}

bool trivially_true(const LinearConstraint& c) {
    if (!c.coeffs.empty()) return false;
    return c.rel == Relation::Eq ? c.rhs == 0 : c.rhs >= 0;
}

bool trivially_false(const LinearConstraint& c) {
    if (!c.coeffs.empty()) return false;
    return c.rel == Relation::Eq ? c.rhs != 0 : c.rhs < 0;
}

std::string to_string(const LinearConstraint& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, coeff] : c.coeffs) {
        if (coeff < 0) {
            os << (first ? "-" : " - ");
        } else if (!first) {
            os << " + ";
        }
        Rational mag = abs(coeff);
        if (mag != 1) os << to_string(mag) << "*";
        os << to_string(var);
        first = false;
    }
    if (first) os << "0";
    os << (c.rel == Relation::Eq ? " = " : " <= ") << to_string(c.rhs);
    return os.str();
}

}  // namespace dofrs
