#pragma once

#include <string>

#include "json.hpp"

#include "thetaquartic/bitangents.hpp"
#include "thetaquartic/fingerprint.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/weber.hpp"

namespace thetaquartic::io {

using Json = nlohmann::json;

// Complex numbers are always [re, im].
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);

// {"genus": g, "tau": [[[re, im], ...], ...]}. Validates on load.
Json period_matrix_to_json(const SiegelPoint& tau);
SiegelPoint period_matrix_from_json(const Json& j);

// {"genus": 3, "bitangents": [{"char": "m'|m''", "coords": [[re, im] x3]} x28]}
Json bitangents_to_json(const BitangentSet& set);
BitangentSet bitangents_from_json(const Json& j);

// {"reference": "m'|m''", "quotients": [{"char": ..., "value": [re, im]} x36]}
Json fingerprint_to_json(const Fingerprint& fp);
Fingerprint fingerprint_from_json(const Json& j);

Json comparison_to_json(const CurveComparison& cmp);

// Throws ParseError for unreadable files and malformed JSON.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

}  // namespace thetaquartic::io
