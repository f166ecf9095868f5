#pragma once

#include "l2k/algebra.hpp"

#include <json.hpp>

#include <string_view>

namespace l2k::detail {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

/// Accessors that throw ParseError naming the offending field.
const Json& field(const Json& obj, const char* key, std::string_view where);
std::string string_field(const Json& obj, const char* key, std::string_view where);
std::uint64_t unsigned_value(const Json& v, std::string_view where);

Rational rational_from_json(const Json& v, std::string_view where);
Scalar scalar_from_json(const Json& v, std::string_view where);
Json scalar_to_json(const Scalar& s);

/// Shape only; group axioms are checked by the consumers.
CayleyTable cayley_from_json(const Json& table);

AlgebraPtr algebra_from_json(const Json& doc);

}  // namespace l2k::detail
