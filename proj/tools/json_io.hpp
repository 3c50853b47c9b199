#pragma once

// JSON encoding of the library types used by og6lat. Integers that fit in
// int64 are plain numbers, larger ones are decimal strings; rationals are
// "p/q" strings (or plain integers when integral).

#include "og6/cones.hpp"
#include "og6/isometry.hpp"
#include "og6/mukai.hpp"
#include "og6/orbits.hpp"
#include "og6/verify.hpp"

#include "json.hpp"

namespace og6::io {

using json = nlohmann::ordered_json;

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntMatrix& m);
json to_json(const DiscriminantElement& x);
json to_json(const OrbitInvariants& inv);
json to_json(const Membership& m);
json to_json(const IsometryWord& w);
json to_json(const MukaiVector& x);
json to_json(const WallClassification& w);
json to_json(const ChamberReport& r, const PicardData& pic);
json to_json(const WallList& w, const PicardData& pic);
json to_json(const LagrangianReport& r);
json to_json(const Div2Scan& s);
json to_json(const verify::ClaimResult& r, bool with_time);

/// InvalidInput on malformed values.
Integer parse_integer(const json& j);
Rational parse_rational_value(const json& j);
IntVector parse_int_vector(const json& j);
RatVector parse_rat_vector(const json& j);
IntMatrix parse_int_matrix(const json& j);
MukaiVector parse_mukai(const json& j);
IsometryWord parse_word(const LatticePtr& l, const json& j);
/// Parses text as JSON; InvalidInput with the parser message otherwise.
json parse_text(const std::string& text);

}  // namespace og6::io
