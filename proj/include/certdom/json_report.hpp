#pragma once

#include <json.hpp>

#include "certdom/analysis.hpp"
#include "certdom/domination.hpp"
#include "certdom/solver.hpp"
#include "certdom/structure.hpp"

namespace certdom {

// Stable key order: every object is emitted in insertion order.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const SolveResult& r);
Json to_json(const BoundReport& r);
Json to_json(const ModificationReport& r);
Json to_json(const NGReport& r);
Json to_json(const DD2Pair& p);
Json to_json(const StructureClass& c);

/// One line of JSON without a trailing newline.
inline std::string to_line(const Json& j) { return j.dump(); }

}  // namespace certdom
