#pragma once

#include "dofrs/system.hpp"

#include <vector>

namespace dofrs::geometry {

struct Vertex {
    Assignment point;
    std::vector<int> active;  // indices of tight rows in the canonical system
};

struct VertexSet {
    InequalitySystem canonical;  // active indices refer to these constraints
    std::vector<Vertex> vertices;
};

/// All vertices of a bounded polyhedron, by solving every full-rank
/// n-subset of rows and keeping the feasible, deduplicated solutions.
/// Vertices are ordered lexicographically by coordinates. Throws
/// UnboundedError when a recession direction exists; an infeasible system
/// yields an empty vertex list.
VertexSet enumerate_vertices(const InequalitySystem& sys);

}  // namespace dofrs::geometry
