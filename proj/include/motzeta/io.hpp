#pragma once

#include <string>

#include "json.hpp"
#include "motzeta/newton.hpp"

namespace motzeta {

using Json = nlohmann::ordered_json;

/// Read and parse a JSON file; failures become ParseError.
Json read_json_file(const std::string& path);

enum class InputKind { Sncd, Fan, Newton };
/// Classify a document by its distinguishing field.
InputKind input_kind(const Json& doc);

SncdData sncd_from_json(const Json& doc);
FanModel fan_from_json(const Json& doc);
NewtonInput newton_from_json(const Json& doc);

/// Emit a model in the input schema: every maximal cell and every cell of
/// nonzero weight, in complex order, with e and a per maximal cell.
Json fan_to_json(const FanModel& f);

Json series_to_json(const ZSeries& s);
Json poles_to_json(const PoleSet& poles);
Json faces_to_json(const std::vector<FaceRecord>& faces);

/// Parse "v1,v2,..." into an integer vector.
IntVec parse_int_list(const std::string& text);

}  // namespace motzeta
