#pragma once

#include <json.hpp>
#include <string>

#include "census.hpp"
#include "certify.hpp"
#include "endo.hpp"

namespace tame::io {

/// Insertion-ordered JSON keeps the documented field order and makes dumps
/// byte-stable; all integers travel as decimal strings.
using Json = nlohmann::ordered_json;

std::string dump(const Json& j, bool pretty);

Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);

Json curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);
CurveSpec curve_from_string(const std::string& text);

Json certificate_to_json(const TamenessCertificate& cert);

Json endo_to_json(const EndoStructure& e);

Json record_to_json(const FrobeniusRecord& r);
Json evidence_to_json(const ImageEvidence& e);

/// JSON lines: one FrobeniusRecord per line, then the ImageEvidence object.
std::string census_to_jsonl(const Census& census);
std::string census_to_pretty(const Census& census);

Integer integer_from_json(const Json& j);
Json integer_to_json(const Integer& v);

/// Parse an IntPoly from either a JSON object or a comma-separated
/// coefficient list ("c0,c1,...").
IntPoly poly_from_text(const std::string& text);

}  // namespace tame::io
