#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hopfcoh/cyclotomic.hpp"

namespace hopfcoh {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the scalar grammar used in datum files and records:
///   scalar  := ['-'] term (('+'|'-') term)*
///   term    := rational ['*' zetapow] | zetapow
///   rational:= integer ['/' integer]
///   zetapow := 'zeta' '(' integer ')' ['^' ['-'] integer]
/// Whitespace is insignificant. Example: "3*zeta(12)^5 - 1/2".
CycNum parse_scalar(std::string_view text);

}  // namespace hopfcoh
