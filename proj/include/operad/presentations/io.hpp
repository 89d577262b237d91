#pragma once

#include "operad/presentations/presentation.hpp"

#include <json.hpp>
#include <string>

namespace operad {

// Presentation document:
//   { "name": str, "kind": "symmetric" | "regular",
//     "generators": { "dim": int, "names": [str], "action12": [[rational]] },
//     "relations": [ [ { "comp": "I"|"II"|"III"|"1"|"2", "lower": int, "upper": int,
//                        "coeff": rational } ] ] }
// action12 is omitted for the regular kind. Rationals are "p/q" or "p" strings.
// Relations are written as the canonical RREF basis.
nlohmann::json presentation_to_json(const QuadPresentation& p);
// Throws std::invalid_argument on malformed input.
QuadPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// Reads a JSON file; throws std::invalid_argument when missing or unparsable.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "zoo:Name" or a path to a presentation document.
QuadPresentation load_presentation(const std::string& ref);
// Generator map document: { "gen_map": [[rational]] }, columns = images of the
// source generators.
Matrix load_gen_map(const std::string& path);

}  // namespace operad
