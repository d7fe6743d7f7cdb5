#include "dofrs/var_id.hpp"

#include "dofrs/errors.hpp"

#include <cctype>

namespace dofrs {

VarId dof_var(int i) { return {VarKind::Dof, i}; }
VarId private_var(int i) { return {VarKind::PrivateDof, i}; }
VarId common_var(int i) { return {VarKind::CommonDof, i}; }
VarId power_var() { return {VarKind::Power, 0}; }
VarId power_var(int i) { return {VarKind::Power, i}; }

std::string to_string(const VarId& v) {
    switch (v.kind) {
        case VarKind::Dof: return "d" + std::to_string(v.index);
        case VarKind::PrivateDof: return "dp" + std::to_string(v.index);
        case VarKind::CommonDof: return "dc" + std::to_string(v.index);
        case VarKind::Power: return v.index == 0 ? "a" : "a" + std::to_string(v.index);
    }
    return "?";
}

VarId parse_var(std::string_view name) {
    auto bad = [&] { return ParseError("invalid variable name: '" + std::string(name) + "'"); };
    if (name.empty()) throw bad();

    VarKind kind;
    size_t digits_at;
    if (name == "a") return power_var();
    if (name.starts_with("dp")) {
        kind = VarKind::PrivateDof;
        digits_at = 2;
    } else if (name.starts_with("dc")) {
        kind = VarKind::CommonDof;
        digits_at = 2;
    } else if (name.front() == 'd') {
        kind = VarKind::Dof;
        digits_at = 1;
    } else if (name.front() == 'a') {
        kind = VarKind::Power;
        digits_at = 1;
    } else {
        throw bad();
    }

    std::string_view digits = name.substr(digits_at);
    if (digits.empty()) throw bad();
    int index = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        index = index * 10 + (c - '0');
        if (index > 1'000'000) throw bad();
    }
    if (index < 1) throw bad();
    return {kind, index};
}

}  // namespace dofrs
