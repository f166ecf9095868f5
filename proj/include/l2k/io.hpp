#pragma once

#include "l2k/algebra.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace l2k {

/// Algebra description document, one of
///   {"kind":"multi_matrix","blocks":[2,1],"weights":["1/3","1/3"]}
///   {"kind":"group","cayley":[[0,1],[1,0]]}
///   {"kind":"tensor","left":{...},"right":{...}}
/// with an optional "name". Rationals are "p/q" strings (plain integers are
/// accepted too). Malformed documents throw ParseError; documents describing
/// something that is not a tracial algebra throw ValidationError.
AlgebraPtr parse_algebra(std::string_view text);
AlgebraPtr load_algebra(const std::filesystem::path& file);

/// Whole file as a string; ParseError if it cannot be read.
std::string read_text_file(const std::filesystem::path& file);

/// "p/q" or {"re":"p/q","im":"p/q"} as text; the inverse of scalar_to_text.
Scalar parse_scalar(std::string_view text);
/// Reals as a quoted "p/q", everything else as {"re":..,"im":..}.
std::string scalar_to_text(const Scalar& s);

}  // namespace l2k
