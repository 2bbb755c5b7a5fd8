#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gac/class_algebra.hpp"
#include "gac/classify.hpp"
#include "gac/stability.hpp"
#include "gac/types.hpp"

namespace gac {

using json = nlohmann::json;

/// Bumped whenever the table document layout changes; part of cache keys.
inline constexpr int kTableSchemaVersion = 1;

json to_json(const FieldSpec& spec);
json to_json(const MatFq& m);
json to_json(const Partition& p);
json to_json(const GLType& lambda);
json to_json(const GAType& pair);
json to_json(const ClassIndex& index);
json to_json(const StructConstReport& report);
json to_json(const MultiplicationTable& table);
json to_json(const CheckReport& report);

/// {"group","n","q","type","modified","length","ll_a"} for a member of gid.
json classification_json(const GroupId& gid, const MatFq& a);

/// Accepts {"rows","cols","entries"} or a nested array of rows.
MatFq matrix_from_json(const FieldSpec& spec, const json& doc);
GLType gl_type_from_json(const FieldSpec& spec, const json& doc);
GAType ga_type_from_json(const FieldSpec& spec, const json& doc);
MultiplicationTable table_from_json(const json& doc);

/// Type text: either the JSON form or the shorthand "1:t-1,2:t-1", where each
/// item "part:poly" adds one part to lambda(poly). "", "{}" and "empty" denote
/// the empty type. Throws "parse".
GLType parse_gl_type(const FieldSpec& spec, std::string_view text);

/// Pair text: the JSON form, or the shorthand for the base followed by "@k"
/// (k = 0 when omitted). Shorthand pairs take the given flavor.
GAType parse_ga_type(const FieldSpec& spec, std::string_view text, Flavor flavor = Flavor::modified);

/// One CSV line per nonzero coefficient: a,b,c,coefficient.
std::string table_to_csv(const MultiplicationTable& table);

}  // namespace gac
