#include "hgl/spec_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hgl {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& what) { throw SpecParseError(what, 0, 0); }

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + ": expected an integer");
  return v.get<std::int64_t>();
}

IntMatrix as_matrix(const json& v, std::size_t cols, const std::string& where) {
  if (!v.is_array()) schema_error(where + ": expected an array of rows");
  IntMatrix m(v.size(), cols);
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!v[r].is_array()) schema_error(row_where + ": expected an array");
    if (v[r].size() != cols)
      schema_error(row_where + ": expected " + std::to_string(cols) + " entries, got " + std::to_string(v[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_int(v[r][c], row_where + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::int64_t parse_integer(std::string_view s, const std::string& context) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && t[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) throw std::invalid_argument(context + ": bad integer '" + t + "'");
  return v;
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-' || c == '+' || c == ' ';
  });
}

GroupElement parse_expression(const GroupSpec& spec, const std::string& text) {
  const auto& names = spec.names();
  GroupElement acc = spec.zero();
  std::size_t i = 0;
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty grading");
  bool any = false;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw std::invalid_argument("grading '" + s + "': expected + or - at offset " + std::to_string(i));
    }
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::int64_t k = j > i ? parse_integer(s.substr(i, j - i), "grading") : 1;
    i = j;
    while (i < s.size() && (s[i] == ' ' || s[i] == '*')) ++i;
    j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    const std::string name = s.substr(i, j - i);
    i = j;
    if (name.empty()) {
      if (k != 0) throw std::invalid_argument("grading '" + s + "': a bare integer must be 0");
    } else {
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw std::invalid_argument("grading '" + s + "': unknown generator '" + name + "'");
      acc = acc + scalar_mul(sign * k, spec.generator(static_cast<std::size_t>(it - names.begin())));
    }
    any = true;
  }
  return acc;
}

}  // namespace

SpecParseError::SpecParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

LoadedSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    const auto [line, col] = line_column(text, ex.byte > 0 ? ex.byte - 1 : 0);
    throw SpecParseError("malformed JSON", line, col);
  }
  if (!doc.is_object()) schema_error("spec must be a JSON object");

  if (doc.contains("surface")) {
    const auto& s = doc["surface"];
    if (!s.is_object() || !s.contains("genus") || !s.contains("boundary"))
      schema_error("surface: expected {\"genus\": g, \"boundary\": r}");
    const auto g = as_int(s["genus"], "surface.genus");
    const auto r = as_int(s["boundary"], "surface.boundary");
    if (g < 0 || r < 0 || g > 64 || r > 64 || g + r == 0) schema_error("surface: need 0 <= g, r <= 64 and g + r > 0");
    return {GroupSpec::surface(static_cast<int>(g), static_cast<int>(r)), std::pair{int(g), int(r)}};
  }

  if (!doc.contains("generators")) schema_error("missing key \"generators\"");
  const auto n64 = as_int(doc["generators"], "generators");
  if (n64 < 1 || n64 > 64) schema_error("generators: expected 1..64");
  const auto n = static_cast<std::size_t>(n64);
  const IntMatrix relations = doc.contains("relations") ? as_matrix(doc["relations"], n, "relations") : IntMatrix(0, n);
  if (!doc.contains("form")) schema_error("missing key \"form\"");
  const IntMatrix form = as_matrix(doc["form"], n, "form");
  if (form.rows() != n) schema_error("form: expected " + std::to_string(n) + " rows");
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) schema_error("names: expected an array of strings");
    for (const auto& v : doc["names"]) {
      if (!v.is_string()) schema_error("names: expected strings");
      names.push_back(v.get<std::string>());
    }
  }
  for (const auto& [key, _] : doc.items())
    if (key != "generators" && key != "relations" && key != "form" && key != "names")
      schema_error("unknown key \"" + key + "\"");
  return {GroupSpec(n, relations, form, std::move(names)), std::nullopt};
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::pair<int, int> parse_surface_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--surface expects g,r");
  const auto g = parse_integer(std::string_view(text).substr(0, comma), "--surface genus");
  const auto r = parse_integer(std::string_view(text).substr(comma + 1), "--surface boundary");
  if (g < 0 || r < 0 || g > 64 || r > 64 || g + r == 0)
    throw std::invalid_argument("--surface: need 0 <= g, r <= 64 and g + r > 0");
  return {static_cast<int>(g), static_cast<int>(r)};
}

GroupElement parse_grading(const GroupSpec& spec, const std::string& text) {
  const std::string s = trim(text);
  if (looks_numeric(s) && (s.find(',') != std::string::npos || spec.n_generators() == 1)) {
    std::vector<std::int64_t> coords;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      coords.push_back(parse_integer(std::string_view(s).substr(start, comma - start), "grading"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coords.size() != spec.n_generators())
      throw std::invalid_argument("grading '" + s + "': expected " + std::to_string(spec.n_generators()) +
                                  " coordinates");
    return spec.element(coords);
  }
  return parse_expression(spec, s);
}

std::vector<GroupElement> parse_gradings(const GroupSpec& spec, const std::string& text) {
  std::vector<GroupElement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::string item = trim(std::string_view(text).substr(start, semi - start));
    if (!item.empty()) {
      const auto z = parse_grading(spec, item);
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.empty()) throw std::invalid_argument("no gradings given");
  return out;
}

}  // namespace hgl
