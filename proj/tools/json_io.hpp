#pragma once
// JSON documents for the command-line tool. Complex numbers are [re, im]
// pairs and matrices are {"n": n, "entries": rows of pairs}.
#include <string>

#include "json.hpp"
#include "lieclosed/types.hpp"

namespace lieclosed::cli {

using Json = nlohmann::ordered_json;

// Parses text; syntax errors report line and column of `origin`.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

Matrix matrix_from_json(const Json& doc, const std::string& origin);
Json matrix_to_json(const Matrix& m);
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& v, const std::string& what);

// Indented JSON with number arrays and matrix rows kept on one line.
std::string render(const Json& doc);

}  // namespace lieclosed::cli
