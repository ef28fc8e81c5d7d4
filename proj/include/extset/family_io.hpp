#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "extset/core.hpp"

namespace extset {

/// Malformed family input. line() is 1-based, 0 when not applicable (JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedFamily {
  Family family;
  int duplicates = 0;  // repeated sets dropped while building the family
};

/// Text format: header line `n k`, then one set per line as increasing
/// 1-indexed integers. Blank lines and `#` comments are ignored.
ParsedFamily parse_family_text(std::string_view text);
std::string format_family_text(const Family& fam);

/// JSON format: {"n": .., "k": .., "sets": [[..], ..]}.
ParsedFamily parse_family_json(std::string_view text);
std::string format_family_json(const Family& fam);

/// Dispatches on the first non-blank character ('{' means JSON).
ParsedFamily parse_family_auto(std::string_view text);

}  // namespace extset
