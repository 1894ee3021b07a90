#pragma once

// Canonical text notation.
//
//   TUPLE    := INT | "(" TUPLE ("," TUPLE)* ")" | "()"
//   LAYOUT   := TUPLE ":" TUPLE
//   MORPHISM := TUPLE "--(" [INT ("," INT)*] ")-->" TUPLE      (0 denotes ⋆)
//
// The printer emits no whitespace; the parser skips spaces anywhere.
// Parse failures throw `Error{ParseError}`; well-formed text describing an
// invalid value (e.g. incongruent shape and stride) throws the value's error.

#include <string>
#include <string_view>

#include "layoutalg/flat_layout.hpp"
#include "layoutalg/layout.hpp"
#include "layoutalg/nest_morphism.hpp"
#include "layoutalg/nested_tuple.hpp"
#include "layoutalg/tuple_morphism.hpp"

namespace layoutalg {

NestedTuple parse_tuple(std::string_view text);
Layout parse_layout(std::string_view text);
NestMorphism parse_morphism(std::string_view text);
/// A bare comma-separated list of map values, e.g. "1,0,3".
PointedMap parse_map(std::string_view text);

std::string to_string(const Profile& p);
std::string to_string(const NestedTuple& t);
std::string to_string(const FlatLayout& l);
std::string to_string(const Layout& l);
std::string to_string(const PointedMap& m);
std::string to_string(const TupleMorphism& f);
std::string to_string(const NestMorphism& f);

}  // namespace layoutalg
