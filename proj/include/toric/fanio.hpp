#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

enum class ParseErrorKind {
  Syntax,
  NonIntegerEntry,
  DuplicateRay,
  IndexOutOfRange,
  UnknownField,
  BadValue,
};

const char* to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int col, const std::string& where,
             const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ParseErrorKind kind_;
  int line_, col_;
};

/// Parse the JSON fan interchange format:
///   {"dimension": 2|3, "rays": [[int,...]], "cones": [[idx,...]], "name"?: s}
/// Integers only; duplicate rays and out-of-range indices are rejected with
/// positioned diagnostics; unknown fields are rejected. Input not starting
/// with '{' is read by the terse line-oriented alternate format
/// (dim/name/ray/cone directives, '#' comments).
FanCandidate parse_fan_file(const std::string& text);

/// Canonical serialization; parse(serialize(f)) == f.
std::string serialize_fan(const FanCandidate& f);

/// Built-in demonstration fans: p3, p1p1, p1cubed, pyramid.
FanCandidate builtin_fan(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace toric
