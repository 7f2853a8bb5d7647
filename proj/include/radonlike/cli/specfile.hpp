#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "radonlike/exponents.hpp"

namespace radonlike::cli {

using Json = nlohmann::ordered_json;

/// Parses a SpecFile document; unknown keys, wrong types and inconsistent
/// lengths raise ErrorKind::Schema.
OperatorSpec parse_spec(const Json& doc);
OperatorSpec load_spec(const std::filesystem::path& path);

/// Canonical document: rationals as reduced strings, terms in graded order.
Json spec_to_json(const OperatorSpec& spec);

Json polynomial_to_json(const Polynomial& p);
Json multiindex_to_json(const MultiIndex& m);
Json rational_to_json(const Rational& q);

/// "a,b,c" -> MultiIndex.
MultiIndex parse_index_list(const std::string& text);

}  // namespace radonlike::cli
