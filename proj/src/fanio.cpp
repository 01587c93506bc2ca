#include "toric/fanio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace toric {

using nlohmann::json;

const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "SyntaxError";
    case ParseErrorKind::NonIntegerEntry: return "NonIntegerEntry";
    case ParseErrorKind::DuplicateRay: return "DuplicateRay";
    case ParseErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ParseErrorKind::UnknownField: return "UnknownField";
    case ParseErrorKind::BadValue: return "BadValue";
  }
  return "?";
}

namespace {

std::string format_parse_error(ParseErrorKind kind, int line, int col, const std::string& where,
                               const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind);
  if (line > 0) os << " at line " << line << ", col " << col;
  if (!where.empty()) os << " (" << where << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::pair<int, int> line_col_of(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int col, const std::string& where,
                       const std::string& detail)
    : std::runtime_error(format_parse_error(kind, line, col, where, detail)),
      kind_(kind),
      line_(line),
      col_(col) {}

namespace {

// Terse line-oriented alternate format:
//   dim 3
//   ray 0 0 1
//   cone 0 1 2
// Blank lines and '#' comments allowed; ray indices are 0-based in input
// order.
FanCandidate parse_fan_lines(const std::string& text) {
  FanCandidate f;
  bool saw_dim = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<IntVec, int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "dim") {
      if (!(ls >> f.ambient_dim) || (f.ambient_dim != 2 && f.ambient_dim != 3))
        throw ParseError(ParseErrorKind::BadValue, lineno, 1, "dim", "must be 2 or 3");
      saw_dim = true;
    } else if (word == "name") {
      std::getline(ls >> std::ws, f.name);
    } else if (word == "ray") {
      if (!saw_dim)
        throw ParseError(ParseErrorKind::Syntax, lineno, 1, "", "dim must come first");
      IntVec v;
      long long x;
      while (ls >> x) v.emplace_back(x);
      if (!ls.eof())
        throw ParseError(ParseErrorKind::NonIntegerEntry, lineno, 1, "ray",
                         "exact integers required");
      if (int(v.size()) != f.ambient_dim)
        throw ParseError(ParseErrorKind::BadValue, lineno, 1, "ray",
                         "expected " + std::to_string(f.ambient_dim) + " coordinates");
      auto [it, fresh] = seen.emplace(v, int(f.rays.size()));
      if (!fresh)
        throw ParseError(ParseErrorKind::DuplicateRay, lineno, 1, "ray",
                         "identical to ray " + std::to_string(it->second));
      f.rays.push_back(std::move(v));
    } else if (word == "cone") {
      std::vector<int> idx;
      long long k;
      while (ls >> k) {
        if (k < 0 || k >= (long long)f.rays.size())
          throw ParseError(ParseErrorKind::IndexOutOfRange, lineno, 1, "cone",
                           "ray index " + std::to_string(k) + " out of range");
        idx.push_back(int(k));
      }
      if (!ls.eof() || idx.empty())
        throw ParseError(ParseErrorKind::BadValue, lineno, 1, "cone",
                         "nonempty integer index list required");
      f.max_cones.push_back(std::move(idx));
    } else {
      throw ParseError(ParseErrorKind::UnknownField, lineno, 1, word, "unknown directive");
    }
  }
  if (!saw_dim) throw ParseError(ParseErrorKind::Syntax, 1, 1, "", "missing dim directive");
  return f;
}

}  // namespace

FanCandidate parse_fan_file(const std::string& text) {
  // Auto-detect: JSON documents start with '{'; anything else is read by the
  // line-oriented alternate format.
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ParseError(ParseErrorKind::Syntax, 1, 1, "", "empty input");
  if (text[first] != '{') return parse_fan_lines(text);

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte > 0 ? size_t(e.byte - 1) : 0);
    throw ParseError(ParseErrorKind::Syntax, line, col, "", e.what());
  }
  if (!doc.is_object())
    throw ParseError(ParseErrorKind::Syntax, 1, 1, "", "top-level value must be an object");

  static const std::vector<std::string> known = {"dimension", "rays", "cones", "name"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ParseError(ParseErrorKind::UnknownField, 0, 0, it.key(), "unknown field");

  FanCandidate f;
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw ParseError(ParseErrorKind::BadValue, 0, 0, "dimension", "integer 2 or 3 required");
  f.ambient_dim = doc["dimension"].get<int>();
  if (f.ambient_dim != 2 && f.ambient_dim != 3)
    throw ParseError(ParseErrorKind::BadValue, 0, 0, "dimension", "must be 2 or 3");

  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError(ParseErrorKind::BadValue, 0, 0, "name", "string required");
    f.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("rays") || !doc["rays"].is_array())
    throw ParseError(ParseErrorKind::BadValue, 0, 0, "rays", "array of integer vectors required");
  std::map<IntVec, int> seen;
  for (size_t i = 0; i < doc["rays"].size(); ++i) {
    const json& rv = doc["rays"][i];
    std::string where = "rays[" + std::to_string(i) + "]";
    if (!rv.is_array() || int(rv.size()) != f.ambient_dim)
      throw ParseError(ParseErrorKind::BadValue, 0, 0, where,
                       "expected " + std::to_string(f.ambient_dim) + " coordinates");
    IntVec v;
    for (size_t j = 0; j < rv.size(); ++j) {
      if (!rv[j].is_number_integer())
        throw ParseError(ParseErrorKind::NonIntegerEntry, 0, 0,
                         where + "[" + std::to_string(j) + "]", "exact integer required");
      v.emplace_back(rv[j].get<long long>());
    }
    auto [it, fresh] = seen.emplace(v, int(i));
    if (!fresh)
      throw ParseError(ParseErrorKind::DuplicateRay, 0, 0, where,
                       "identical to rays[" + std::to_string(it->second) + "]");
    f.rays.push_back(std::move(v));
  }

  if (!doc.contains("cones") || !doc["cones"].is_array())
    throw ParseError(ParseErrorKind::BadValue, 0, 0, "cones", "array of index lists required");
  for (size_t i = 0; i < doc["cones"].size(); ++i) {
    const json& cv = doc["cones"][i];
    std::string where = "cones[" + std::to_string(i) + "]";
    if (!cv.is_array() || cv.empty())
      throw ParseError(ParseErrorKind::BadValue, 0, 0, where, "nonempty index list required");
    std::vector<int> idx;
    for (size_t j = 0; j < cv.size(); ++j) {
      if (!cv[j].is_number_integer())
        throw ParseError(ParseErrorKind::NonIntegerEntry, 0, 0,
                         where + "[" + std::to_string(j) + "]", "integer index required");
      long long k = cv[j].get<long long>();
      if (k < 0 || k >= (long long)f.rays.size())
        throw ParseError(ParseErrorKind::IndexOutOfRange, 0, 0,
                         where + "[" + std::to_string(j) + "]",
                         "ray index " + std::to_string(k) + " out of range");
      idx.push_back(int(k));
    }
    f.max_cones.push_back(std::move(idx));
  }
  return f;
}

std::string serialize_fan(const FanCandidate& f) {
  json doc;
  doc["dimension"] = f.ambient_dim;
  if (!f.name.empty()) doc["name"] = f.name;
  json rays = json::array();
  for (const auto& r : f.rays) {
    json rv = json::array();
    for (const auto& x : r) rv.push_back((long long)x);
    rays.push_back(std::move(rv));
  }
  doc["rays"] = std::move(rays);
  json cones = json::array();
  for (const auto& c : f.max_cones) cones.push_back(c);
  doc["cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

FanCandidate builtin_fan(const std::string& name) {
  FanCandidate f;
  f.name = name;
  if (name == "p3") {
    f.ambient_dim = 3;
    f.rays = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, -1}};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  } else if (name == "p1p1") {
    f.ambient_dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  } else if (name == "p1cubed") {
    f.ambient_dim = 3;
    f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    f.max_cones = {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                   {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}};
  } else if (name == "pyramid") {
    f.ambient_dim = 3;
    f.rays = {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, -1}};
    f.max_cones = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}, {0, 1, 2, 3}};
  } else {
    throw std::invalid_argument("unknown builtin fan: " + name);
  }
  return f;
}

std::vector<std::string> builtin_names() { return {"p3", "p1p1", "p1cubed", "pyramid"}; }

}  // namespace toric
