#pragma once

#include "dofrs/rational.hpp"
#include "dofrs/system.hpp"

#include <random>
#include <string>
#include <vector>

namespace dofrs::test {

inline Rational rat(const char* s) { return parse_rational(s); }

using Term = std::pair<const char*, const char*>;  // variable name, coefficient

inline LinearConstraint row(std::initializer_list<Term> terms, Relation rel, const char* rhs) {
    LinearConstraint c;
    c.rel = rel;
    c.rhs = parse_rational(rhs);
    for (const auto& [name, coeff] : terms) {
        Rational r = parse_rational(coeff);
        if (r != 0) c.coeffs[parse_var(name)] = std::move(r);
    }
    return c;
}

inline LinearConstraint le(std::initializer_list<Term> terms, const char* rhs) {
    return row(terms, Relation::LessEq, rhs);
}

inline LinearConstraint eq(std::initializer_list<Term> terms, const char* rhs) {
    return row(terms, Relation::Eq, rhs);
}

inline InequalitySystem sys(std::initializer_list<const char*> vars,
                            std::initializer_list<LinearConstraint> rows) {
    std::vector<VarId> ids;
    for (const char* name : vars) ids.push_back(parse_var(name));
    InequalitySystem s = make_system(std::move(ids));
    for (const auto& r : rows) s.add(r);
    return s;
}

inline Assignment point(std::initializer_list<Term> values) {
    Assignment a;
    for (const auto& [name, value] : values) a[parse_var(name)] = parse_rational(value);
    return a;
}

// Small random rationals keep property tests fast while still exercising
// non-integer arithmetic.
inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline LinearConstraint random_constraint(std::mt19937_64& rng, const std::vector<VarId>& vars,
                                          bool allow_equality = true) {
    LinearConstraint c;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& v : vars) {
        if (coin(rng) == 0) continue;  // keep it sparse
        Rational r = random_rational(rng);
        if (r != 0) c.coeffs[v] = std::move(r);
    }
    c.rel = allow_equality && coin(rng) == 0 ? Relation::Eq : Relation::LessEq;
    c.rhs = random_rational(rng);
    return c;
}

inline InequalitySystem random_system(std::mt19937_64& rng, int num_vars, int num_rows,
                                      bool allow_equality = true) {
    std::vector<VarId> vars;
    for (int i = 1; i <= num_vars; ++i) vars.push_back(dof_var(i));
    InequalitySystem s = make_system(vars);
    for (int i = 0; i < num_rows; ++i) {
        s.add(random_constraint(rng, s.vars, allow_equality));
    }
    return s;
}

inline Assignment random_point(std::mt19937_64& rng, const std::vector<VarId>& vars) {
    Assignment a;
    for (const auto& v : vars) a[v] = random_rational(rng);
    return a;
}

}  // namespace dofrs::test
