#include "dofrs/system.hpp"

#include "dofrs/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dofrs {

bool InequalitySystem::has_var(const VarId& v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
}

int InequalitySystem::var_position(const VarId& v) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || *it != v) return -1;
    return static_cast<int>(it - vars.begin());
}

InequalitySystem& InequalitySystem::add(LinearConstraint c) {
    constraints.push_back(std::move(c));
    return *this;
}

InequalitySystem make_system(std::vector<VarId> vars) {
    InequalitySystem sys;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    sys.vars = std::move(vars);
    return sys;
}

InequalitySystem canonicalize(const InequalitySystem& sys) {
    InequalitySystem out;
    out.vars = sys.vars;
    out.constraints.reserve(sys.constraints.size());
    for (const auto& c : sys.constraints) {
        LinearConstraint n = normalize(c);
        if (trivially_false(n)) {
            throw InfeasibleConstantError("contradictory constant constraint: " + to_string(c));
        }
        if (trivially_true(n)) continue;
        out.constraints.push_back(std::move(n));
    }
    std::sort(out.constraints.begin(), out.constraints.end());
    out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end()),
                          out.constraints.end());
    return out;
}

bool contains(const InequalitySystem& sys, const Assignment& point) {
    for (const auto& v : sys.vars) {
        if (!point.count(v)) {
            throw MissingVariableError("no value for variable " + to_string(v));
        }
    }
    for (const auto& c : sys.constraints) {
        if (!evaluate(c, point)) return false;
    }
    return true;
}

InequalitySystem rename_indices(const InequalitySystem& sys, const std::vector<int>& index_map) {
    auto rename = [&](const VarId& v) -> VarId {
        if (v.index == 0) return v;
        if (v.index < 1 || v.index > static_cast<int>(index_map.size())) {
            throw IndexOutOfRangeError("variable index outside rename map: " + to_string(v));
        }
        return {v.kind, index_map[v.index - 1]};
    };
    InequalitySystem out;
    out.vars.reserve(sys.vars.size());
    for (const auto& v : sys.vars) out.vars.push_back(rename(v));
    std::sort(out.vars.begin(), out.vars.end());
    for (const auto& c : sys.constraints) {
        LinearConstraint r;
        r.rel = c.rel;
        r.rhs = c.rhs;
        for (const auto& [var, coeff] : c.coeffs) r.coeffs[rename(var)] = coeff;
        out.constraints.push_back(std::move(r));
    }
    return out;
}

std::string to_string(const InequalitySystem& sys) {
    std::ostringstream os;
    os << "vars:";
    for (const auto& v : sys.vars) os << " " << to_string(v);
    os << "\n";
    for (const auto& c : sys.constraints) os << "  " << to_string(c) << "\n";
    return os.str();
}

}  // namespace dofrs
