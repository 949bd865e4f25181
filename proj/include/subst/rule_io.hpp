#pragma once

// Plain-text rule files:
//
//   # comment
//   p 3
//   0 -> 0
//   1 -> 1 2
//   2 -> 1
//
// Symbols not listed map to themselves.

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subst/rulespec.hpp"

namespace subst {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

RuleTable parse_rule(std::istream& in);
RuleTable parse_rule(std::string_view text);
RuleTable load_rule_file(const std::string& path);

std::string format_rule(const RuleTable& rule);

}  // namespace subst
