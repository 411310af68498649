#pragma once

#include "cremona/determinantal.hpp"
#include "cremona/polytope.hpp"
#include "cremona/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cremona {

using Json = nlohmann::ordered_json;

// Integers ride as JSON numbers while they fit 64 bits and as strings
// beyond that; rationals are always "p/q" (or "p") strings.
Json json_integer(const Integer& v);
Json json_rational(const Rational& v);
Json json_integer_array(const std::vector<Integer>& v);

Json polytope_to_json(const VPolytope& p);

// `context` prefixes error messages (usually the file path).
VPolytope polytope_from_json(const Json& j, const std::string& context);
LinearFormMatrix matrix_from_json(const Json& j, const std::string& context);

// File loaders; parse errors are reported with the path and line.
VPolytope load_polytope(const std::string& path);
LinearFormMatrix load_matrix(const std::string& path);

// Depth-first flattening into "key,value" rows (arrays indexed [i]), with a
// "key,value" header; numeric content is identical to the JSON by
// construction.
std::string csv_from_json(const Json& j);

}  // namespace cremona
