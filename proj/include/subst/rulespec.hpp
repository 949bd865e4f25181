#pragma once

// Rule data model for one-dimensional deterministic substitution systems.
//
// Blocks are stored leftmost-first, exactly as displayed ("1 -> 1 0 1").
// Intra-block position 0 is the leftmost character; in the numeral view of a
// word the leftmost character is the most significant digit.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subst/natural.hpp"

namespace subst {

using Block = std::vector<Symbol>;

class RuleTable {
 public:
  // blocks.size() must equal p. Block contents are not checked here; see
  // validate() and require_well_formed().
  RuleTable(Radix p, std::vector<Block> blocks);

  Radix alphabet() const noexcept { return p_; }
  const Block& block(Symbol k) const { return blocks_.at(k); }
  std::size_t length(Symbol k) const { return blocks_.at(k).size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  Radix p_;
  std::vector<Block> blocks_;
};

struct Violation {
  enum class Kind {
    SymbolOutOfRange,    // a block entry is >= p
    EmptyBlock,          // erasing substitution
    NonzeroInZeroBlock,  // 0 must map to a block of zeros
    LeadingZero,         // a nonzero symbol's block must start with a nonzero symbol
  };

  Kind kind;
  Symbol symbol;          // which block
  std::size_t position;   // offending position inside the block (0 if n/a)

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every violated invariant, in symbol order. Empty means the rule can drive
// the numeral (word-as-number) map.
std::vector<Violation> validate(const RuleTable& rule);

// Throws RuleError unless every block is non-empty and in range. This is all
// the symbol-array engine needs.
void require_well_formed(const RuleTable& rule);

// Throws RuleError listing the violations unless validate(rule) is empty.
void require_valid(const RuleTable& rule);

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// N when every block has length N.
std::optional<std::size_t> is_constant_length(const RuleTable& rule);

// (code, N, p) naming a constant-length rule; printed as code_{N;p}.
struct WolframCode {
  Natural code;
  std::size_t block_length;
  Radix alphabet;

  friend bool operator==(const WolframCode&, const WolframCode&) = default;
};

// The rule vector a: a[m + n N] is the character at position m of block n.
std::vector<Symbol> rule_vector(const RuleTable& rule);

WolframCode encode_wolfram(const RuleTable& rule);
WolframCode encode_wolfram(const RuleTable& rule, std::size_t block_length);
RuleTable decode_wolfram(const WolframCode& wc);

// Number of rules with this (N, p): p^(pN).
Natural wolfram_code_count(std::size_t block_length, Radix p);

// Reference substitution operator: the double B-function sum selecting
// a[h + N x] from the rule vector.
Symbol substitution_operator(std::span<const Symbol> a, std::size_t block_length, Radix p,
                             Symbol x, std::size_t h);

struct BlockNumeral {
  Natural value;
  std::size_t length;
};

// The numeral of block k (read leftmost-first as most significant) with its
// explicit length. Requires a valid rule.
BlockNumeral f_number(const RuleTable& rule, Symbol k);

// True iff every block has length 1 and k -> block(k)[0] is a bijection.
bool is_reversible(const RuleTable& rule);

// Rules used throughout the examples and tests.
namespace rules {
RuleTable thue_morse();  // 0 -> 01, 1 -> 10
RuleTable cantor();      // 0 -> 000, 1 -> 101
RuleTable fibonacci();   // p = 3: 0 -> 0, 1 -> 12, 2 -> 1
RuleTable identity(Radix p);
}  // namespace rules

}  // namespace subst
