#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cayley/cayley_plane.hpp"
#include "cayley/jordan.hpp"
#include "cayley/kaehler_map.hpp"
#include "cayley/m8c.hpp"

// Interchange formats. Real scalars are JSON numbers; complex scalars are
// two-element arrays [re, im]. An octonion is an array of 8 scalars in the
// basis order e0..e7; a Jordan element is {"xi": [s, s, s], "x": [o, o, o]};
// a tangent pair is {"X": element, "Y": element}. Parsers throw ParseError
// on malformed documents.

namespace cayley {

nlohmann::json to_json(const OctonionR& o);
nlohmann::json to_json(const OctonionC& o);
nlohmann::json to_json(const JordanR& j);
nlohmann::json to_json(const JordanC& j);
nlohmann::json to_json(const TangentPair& s);
nlohmann::json to_json(const Matrix8C& m);
nlohmann::json to_json(const FormValueReport& r);

OctonionR octonion_from_json(const nlohmann::json& doc);
OctonionC octonion_c_from_json(const nlohmann::json& doc);
JordanR jordan_from_json(const nlohmann::json& doc);
JordanC jordan_c_from_json(const nlohmann::json& doc);
TangentPair tangent_pair_from_json(const nlohmann::json& doc);

/// Parses a whole text buffer into JSON, mapping syntax errors to ParseError.
nlohmann::json parse_document(const std::string& text);

} // namespace cayley
