#pragma once

#include "relhom/lab.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace relhom {

/// Records keep their keys sorted, so dumps are byte-stable.
using Json = nlohmann::json;

Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const GroupValue& g);
GroupValue group_from_json(const Json& j);

/// {"domain", "codomain", "matrix"}; modules in compact text, the matrix as
/// row-major integer lists.
Json to_json(const Morphism& f);
Morphism morphism_from_json(const RingSpec& ring, const Json& j);

Json to_json(const ResolutionComplex& res);
ResolutionComplex resolution_from_json(const RingSpec& ring, const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const RingSpec& ring, const Json& j);

Json to_json(const Verdict& v);
Json to_json(const Finding& f);

/// One JSON document per line.
std::string emit_records(const std::vector<Json>& records);

/// Human-readable rendering of a witness, indented by `indent` spaces.
std::string render_witness(const Witness& w, std::size_t indent);
std::string render_report(const SuiteReport& r);

}  // namespace relhom
