#pragma once

// Trajectory generation. Two independent routes produce each step:
//
//   * the symbol-array path replaces every symbol by its block, left to right;
//   * the numeral path maps A_t to A_{t+1} = sum_m p^(offset m) f(d_p(m, A_t)),
//     where offset m is the total length of the blocks emitted for the m
//     lower-order digits.
//
// The array path is the fast one; the numeral path exists to verify it and
// to feed growth and radix-economy analysis.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "subst/natural.hpp"
#include "subst/rulespec.hpp"

namespace subst {

// A state of the substitution system: symbols leftmost-first.
class Word {
 public:
  Word(Radix p, std::vector<Symbol> symbols);

  // The word of exactly `length` symbols whose numeral is a (zero-padded on
  // the left). Throws if a needs more than `length` digits.
  static Word from_numeral(Radix p, const Natural& a, std::size_t length);

  // "0110" (one character per symbol, 0-9 then A-Z) or, when the text holds
  // whitespace or commas, decimal symbols separated by them ("12 0 7").
  static Word parse(Radix p, std::string_view text);

  Radix radix() const noexcept { return p_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  Symbol leftmost() const noexcept { return symbols_.front(); }

  // Computed on demand; leftmost symbol is the most significant digit.
  Natural numeral() const;

  // Inverse of the compact form of parse() for p <= 36; space-separated
  // decimal symbols otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Radix p_;
  std::vector<Symbol> symbols_;
};

// A word in numeral form with its explicit length (leading zeros count).
struct NumberedWord {
  Natural numeral;
  std::size_t length;

  friend bool operator==(const NumberedWord&, const NumberedWord&) = default;
};

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by run() in Both mode when the two routes disagree.
class RepresentationMismatch : public std::runtime_error {
 public:
  RepresentationMismatch(std::size_t step, const std::string& detail);
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// Length of the word produced from w in one step, without producing it.
std::size_t next_length(const RuleTable& rule, const Word& w);

Word step_string(const RuleTable& rule, const Word& w);

// Requires validate(rule) empty and a nonzero leftmost symbol
// (digit len-1 of a). Throws RuleError / WordError otherwise.
NumberedWord step_number(const RuleTable& rule, const Natural& a, std::size_t length);

// Constant-length specialization: output digit h' + N m is taken straight
// from the rule vector, block character N-1-h' of the block for digit m.
NumberedWord step_constant_number(const WolframCode& wc, const Natural& a, std::size_t length);

enum class RunMode { Strings, Numbers, Both };

// Default word-length cap; SUBST_MAX_WORD_LENGTH overrides it.
constexpr std::size_t kDefaultMaxWordLength = 100'000'000;
std::size_t max_word_length_from_env();

struct RunOptions {
  std::size_t steps = 0;
  RunMode mode = RunMode::Strings;
  std::size_t max_word_length = kDefaultMaxWordLength;
};

struct Trajectory {
  RuleTable rule;
  std::vector<Word> words;             // w_0 .. w_T
  std::vector<std::size_t> lengths;    // lengths[t] == words[t].length()
  std::vector<Natural> numerals;       // filled in Numbers / Both mode
  std::size_t requested_steps = 0;
  bool truncated = false;              // stopped early at the word-length cap

  std::size_t steps() const noexcept { return words.empty() ? 0 : words.size() - 1; }
};

Trajectory run(const RuleTable& rule, const Word& seed, const RunOptions& options);

struct GrowthStep {
  mpq_class ratio;                 // A_{t+1} / A_t, exact
  long floor_log_ratio;           // floor(log_p ratio); negative if the word shrank numerically
  std::size_t length_increase;     // len_{t+1} - len_t
};

// Needs numerals (Numbers / Both mode) and no zero numeral.
std::vector<GrowthStep> growth_ratios(const Trajectory& traj);

}  // namespace subst
