#include "subst/rulespec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subst/numtheory.hpp"

namespace subst {

RuleTable::RuleTable(Radix p, std::vector<Block> blocks) : p_(p), blocks_(std::move(blocks)) {
  if (blocks_.size() != p_.value()) {
    throw RuleError("rule over alphabet " + std::to_string(p_.value()) + " needs " +
                    std::to_string(p_.value()) + " blocks, got " +
                    std::to_string(blocks_.size()));
  }
}

std::string Violation::describe() const {
  const std::string s = std::to_string(symbol);
  switch (kind) {
    case Kind::SymbolOutOfRange:
      return "block of " + s + " has an out-of-range symbol at position " +
             std::to_string(position);
    case Kind::EmptyBlock:
      return "block of " + s + " is empty (erasing substitutions are not supported)";
    case Kind::NonzeroInZeroBlock:
      return "block of 0 must contain only zeros (nonzero at position " +
             std::to_string(position) + ")";
    case Kind::LeadingZero:
      return "block of " + s + " starts with 0";
  }
  return "unknown violation";
}

std::vector<Violation> validate(const RuleTable& rule) {
  std::vector<Violation> out;
  const auto p = rule.alphabet().value();
  for (Symbol k = 0; k < p; ++k) {
    const Block& b = rule.block(k);
    if (b.empty()) {
      out.push_back({Violation::Kind::EmptyBlock, k, 0});
      continue;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= p) out.push_back({Violation::Kind::SymbolOutOfRange, k, i});
    }
    if (k == 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != 0 && b[i] < p) {
          out.push_back({Violation::Kind::NonzeroInZeroBlock, k, i});
          break;
        }
      }
    } else if (b.front() == 0) {
      out.push_back({Violation::Kind::LeadingZero, k, 0});
    }
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].describe();
  }
  return os.str();
}

}  // namespace

void require_well_formed(const RuleTable& rule) {
  std::vector<Violation> structural;
  for (const auto& v : validate(rule)) {
    if (v.kind == Violation::Kind::SymbolOutOfRange || v.kind == Violation::Kind::EmptyBlock) {
      structural.push_back(v);
    }
  }
  if (!structural.empty()) throw RuleError("malformed rule: " + join_violations(structural));
}

void require_valid(const RuleTable& rule) {
  const auto vs = validate(rule);
  if (!vs.empty()) throw RuleError("rule cannot drive the numeral map: " + join_violations(vs));
}

std::optional<std::size_t> is_constant_length(const RuleTable& rule) {
  const std::size_t n = rule.length(0);
  for (const Block& b : rule.blocks()) {
    if (b.size() != n) return std::nullopt;
  }
  return n;
}

std::vector<Symbol> rule_vector(const RuleTable& rule) {
  const auto n = is_constant_length(rule);
  if (!n) throw RuleError("rule vector needs a constant-length rule");
  std::vector<Symbol> a;
  a.reserve(rule.alphabet().value() * *n);
  for (const Block& b : rule.blocks()) a.insert(a.end(), b.begin(), b.end());
  return a;
}

WolframCode encode_wolfram(const RuleTable& rule) {
  const auto n = is_constant_length(rule);
  if (!n) throw RuleError("non-constant length: a Wolfram code needs equal block lengths");
  return encode_wolfram(rule, *n);
}

WolframCode encode_wolfram(const RuleTable& rule, std::size_t block_length) {
  require_well_formed(rule);
  const auto n = is_constant_length(rule);
  if (!n) throw RuleError("non-constant length: a Wolfram code needs equal block lengths");
  if (*n != block_length) {
    throw RuleError("rule has block length " + std::to_string(*n) + ", not " +
                    std::to_string(block_length));
  }
  const auto a = rule_vector(rule);
  return {from_digits(rule.alphabet(), a), block_length, rule.alphabet()};
}

Natural wolfram_code_count(std::size_t block_length, Radix p) {
  return power(p, p.value() * block_length);
}

RuleTable decode_wolfram(const WolframCode& wc) {
  const Radix p = wc.alphabet;
  const std::size_t n = wc.block_length;
  if (n == 0) throw RuleError("block length must be >= 1");
  if (sgn(wc.code) < 0 || wc.code >= wolfram_code_count(n, p)) {
    throw RuleError("code " + wc.code.get_str() + " is out of range for N=" + std::to_string(n) +
                    ", p=" + std::to_string(p.value()) + " (must be < " +
                    std::to_string(p.value()) + "^" + std::to_string(p.value() * n) + ")");
  }
  std::vector<Symbol> a = to_digits(p, wc.code);
  a.resize(p.value() * n, 0);
  std::vector<Block> blocks(p.value());
  for (std::size_t k = 0; k < p.value(); ++k) {
    blocks[k].assign(a.begin() + static_cast<std::ptrdiff_t>(k * n),
                     a.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  }
  return RuleTable(p, std::move(blocks));
}

Symbol substitution_operator(std::span<const Symbol> a, std::size_t block_length, Radix p,
                             Symbol x, std::size_t h) {
  if (a.size() != p.value() * block_length) {
    throw std::invalid_argument("rule vector must have p N entries");
  }
  double y = 0.0;
  for (std::size_t n = 0; n < p.value(); ++n) {
    const double select_symbol = bfunc(static_cast<double>(n) - static_cast<double>(x), 0.5);
    for (std::size_t m = 0; m < block_length; ++m) {
      y += a[m + n * block_length] *
           bfunc(static_cast<double>(h) - static_cast<double>(m), 0.5) * select_symbol;
    }
  }
  return static_cast<Symbol>(std::lround(y));
}

BlockNumeral f_number(const RuleTable& rule, Symbol k) {
  require_valid(rule);
  if (k >= rule.alphabet().value()) {
    throw std::out_of_range("symbol " + std::to_string(k) + " is not in the alphabet");
  }
  const Block& b = rule.block(k);
  const unsigned long p = rule.alphabet().value();
  Natural value = 0;
  for (Symbol s : b) {
    value *= p;
    value += s;
  }
  return {std::move(value), b.size()};
}

bool is_reversible(const RuleTable& rule) {
  const auto p = rule.alphabet().value();
  std::vector<bool> hit(p, false);
  for (const Block& b : rule.blocks()) {
    if (b.size() != 1 || b[0] >= p || hit[b[0]]) return false;
    hit[b[0]] = true;
  }
  return true;
}

namespace rules {

RuleTable thue_morse() { return RuleTable(Radix(2), {{0, 1}, {1, 0}}); }
RuleTable cantor() { return RuleTable(Radix(2), {{0, 0, 0}, {1, 0, 1}}); }
RuleTable fibonacci() { return RuleTable(Radix(3), {{0}, {1, 2}, {1}}); }

RuleTable identity(Radix p) {
  std::vector<Block> blocks(p.value());
  for (Symbol k = 0; k < p.value(); ++k) blocks[k] = {k};
  return RuleTable(p, std::move(blocks));
}

}  // namespace rules

}  // namespace subst
