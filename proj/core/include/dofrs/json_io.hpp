#pragma once

#include "dofrs/equivalence.hpp"
#include "dofrs/fme.hpp"
#include "dofrs/strategy.hpp"
#include "dofrs/system.hpp"
#include "dofrs/vertices.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace dofrs {

/// Insertion-ordered JSON keeps emission byte-deterministic.
using Json = nlohmann::ordered_json;

// System format (round-trips bit-exactly for canonical systems):
// {"vars": ["d1","dc1"], "constraints": [
//   {"coeffs": {"d1": "1", "dc1": "-1"}, "rel": "<=", "rhs": "9/10"}]}
Json to_json(const LinearConstraint& c);
Json to_json(const InequalitySystem& sys);
Json to_json(const Assignment& point);

LinearConstraint constraint_from_json(const Json& j);
InequalitySystem system_from_json(const Json& j);
Assignment assignment_from_json(const Json& j);

/// Parses a system document, throwing ParseError with context on any
/// malformed content.
InequalitySystem parse_system_text(const std::string& text);

std::string dump_system(const InequalitySystem& sys);  // 2-space indent + newline

Json to_json(const fme::EliminationStep& step);
Json to_json(const fme::EliminationTrace& trace);

Json to_json(const geometry::FarkasCertificate& cert);
Json to_json(const geometry::InfeasibleEvidence& ev);
Json to_json(const geometry::EquivalenceResult& result);
Json to_json(const geometry::VertexSet& vs);

Json to_json(const model::SynthesisResult& result);

}  // namespace dofrs
