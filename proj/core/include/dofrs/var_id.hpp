#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dofrs {

/// Variable families of the DoF systems. The enum order fixes the global
/// variable order: d_1 < ... < d_K < dp_1 < ... < dp_K < dc_1 < ... < dc_K
/// < a < a_1 < ... < a_K.
enum class VarKind : std::uint8_t {
    Dof = 0,         // d_i: total DoF of user i
    PrivateDof = 1,  // dp_i: private part
    CommonDof = 2,   // dc_i: common part
    Power = 3,       // a (index 0, the single shared exponent) or a_i
};

struct VarId {
    VarKind kind = VarKind::Dof;
    int index = 0;  // 1-based user index; 0 only for the shared power variable

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

VarId dof_var(int i);
VarId private_var(int i);
VarId common_var(int i);
VarId power_var();       // the single shared "a"
VarId power_var(int i);  // a_i of the full region

/// Wire names: "d3", "dp3", "dc3", "a", "a3".
std::string to_string(const VarId& v);

/// Inverse of to_string. Throws ParseError.
VarId parse_var(std::string_view name);

}  // namespace dofrs
