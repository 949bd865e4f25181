#include "subst/rule_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace subst {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

unsigned long parse_uint(const std::string& tok, std::size_t line) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

RuleTable parse_rule(std::istream& in) {
  std::optional<unsigned long> p;
  std::map<unsigned long, std::pair<Block, std::size_t>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto toks = split_ws(line);
    if (toks[0] == "p") {
      if (p) throw ParseError(lineno, "duplicate alphabet header");
      if (toks.size() != 2) throw ParseError(lineno, "header must be 'p <integer>'");
      p = parse_uint(toks[1], lineno);
      if (*p < 2) throw ParseError(lineno, "alphabet size must be >= 2");
      continue;
    }
    if (!p) throw ParseError(lineno, "rule line before 'p <integer>' header");
    if (toks.size() < 2 || toks[1] != "->") {
      throw ParseError(lineno, "expected '<k> -> <s0> <s1> ...'");
    }
    const auto k = parse_uint(toks[0], lineno);
    if (k >= *p) throw ParseError(lineno, "symbol " + toks[0] + " is outside the alphabet");
    if (rows.count(k)) throw ParseError(lineno, "symbol " + toks[0] + " defined twice");
    Block block;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const auto s = parse_uint(toks[i], lineno);
      if (s >= *p) throw ParseError(lineno, "block symbol " + toks[i] + " is outside the alphabet");
      block.push_back(static_cast<Symbol>(s));
    }
    if (block.empty()) throw ParseError(lineno, "empty block (erasing substitutions are not supported)");
    rows.emplace(k, std::make_pair(std::move(block), lineno));
  }
  if (!p) throw ParseError(lineno, "missing 'p <integer>' header");
  std::vector<Block> blocks(*p);
  for (Symbol k = 0; k < *p; ++k) {
    auto it = rows.find(k);
    blocks[k] = it == rows.end() ? Block{k} : it->second.first;
  }
  return RuleTable(Radix(*p), std::move(blocks));
}

RuleTable parse_rule(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_rule(is);
}

RuleTable load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file '" + path + "'");
  return parse_rule(in);
}

std::string format_rule(const RuleTable& rule) {
  std::ostringstream os;
  os << "p " << rule.alphabet().value() << '\n';
  for (Symbol k = 0; k < rule.alphabet().value(); ++k) {
    os << k << " ->";
    for (Symbol s : rule.block(k)) os << ' ' << s;
    os << '\n';
  }
  return os.str();
}

}  // namespace subst
