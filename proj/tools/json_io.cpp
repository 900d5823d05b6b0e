#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lieclosed::cli {

namespace {

std::string position_of(const std::string& text, std::size_t byte) {
  // nlohmann reports the byte just past the offending character
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double finite_number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw InputError(what + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(what + ": non-finite value");
  return x;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    // keep the description after nlohmann's own location prefix
    const auto colon = what.find("syntax error");
    if (colon != std::string::npos) what = what.substr(colon);
    throw InputError(origin + ":" + position_of(text, e.byte) + ": " + what);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Complex complex_from_json(const Json& v, const std::string& what) {
  if (v.is_number()) return {finite_number(v, what), 0.0};
  if (v.is_array() && v.size() == 2) return {finite_number(v[0], what), finite_number(v[1], what)};
  throw InputError(what + ": expected [re, im] or a real number");
}

Matrix matrix_from_json(const Json& doc, const std::string& origin) {
  if (!doc.is_object() || !doc.contains("entries"))
    throw InputError(origin + ": matrix document needs an \"entries\" field");
  const Json& rows = doc["entries"];
  if (!rows.is_array() || rows.empty()) throw InputError(origin + ": \"entries\" must be a non-empty array");
  const std::size_t n = rows.size();
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n)
      throw InputError(origin + ": \"n\" does not match the number of rows");
  }
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InputError(origin + ": row " + std::to_string(i) + " must have " + std::to_string(n) +
                       " entries (matrix must be square)");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          complex_from_json(rows[i][j], origin + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return m;
}

// adding zero maps -0.0 to 0.0 so printed signs carry information
Json complex_to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["n"] = m.rows();
  doc["entries"] = std::move(rows);
  return doc;
}

namespace {

int nesting(const Json& j) {
  if (!j.is_array()) return j.is_object() ? 99 : 0;
  int d = 0;
  for (const Json& e : j) d = std::max(d, nesting(e));
  return d + 1;
}

void render_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      render_into(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && nesting(j) > 2) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k > 0) out += ",\n";
      out += pad;
      render_into(j[k], indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k > 0) out += ", ";
      render_into(j[k], indent, out);
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string render(const Json& doc) {
  std::string out;
  render_into(doc, 0, out);
  return out + "\n";
}

}  // namespace lieclosed::cli
