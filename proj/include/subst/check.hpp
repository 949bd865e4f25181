#pragma once

// Executable form of the word-map theorem: for families of valid rules the
// numeral route and the symbol-array route must agree step for step. Also
// checks Wolfram-code round trips and the length-monotonicity law.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subst/engine.hpp"

namespace subst {

// Deliberate defects for testing the harness itself.
enum class Fault {
  None,
  // Weights block position h by p^h, i.e. reads every block right-to-left.
  Orientation,
};

struct CheckOptions {
  bool exhaustive = true;
  unsigned long exhaustive_max_p = 3;
  std::size_t exhaustive_max_len = 3;
  std::size_t exhaustive_seed_len = 4;
  std::size_t exhaustive_steps = 4;

  std::size_t samples = 200;
  unsigned long sample_max_p = 5;
  std::size_t sample_max_len = 4;
  std::size_t sample_seed_len = 4;
  std::size_t sample_steps = 6;
  std::uint64_t rng_seed = 1;

  bool codec = true;
  std::size_t codec_samples = 1000;  // for (N=3, p=7)

  unsigned workers = 1;
  Fault fault = Fault::None;
};

struct Counterexample {
  std::string family;  // "exhaustive", "sampled", "codec", "second-law"
  std::string rule;    // rule-file text
  std::string seed;
  std::size_t step = 0;
  std::string detail;
};

struct CheckReport {
  std::size_t exhaustive_rules = 0;
  std::size_t exhaustive_cases = 0;  // (rule, seed) pairs
  std::size_t sampled_cases = 0;
  std::size_t steps_checked = 0;
  std::size_t constant_steps_checked = 0;
  std::size_t codec_codes = 0;
  std::size_t mismatches = 0;
  std::size_t second_law_violations = 0;
  std::size_t codec_failures = 0;
  std::optional<Counterexample> first_failure;

  bool passed() const noexcept {
    return mismatches == 0 && second_law_violations == 0 && codec_failures == 0;
  }
};

// Every valid rule with alphabet 2..max_p and block lengths 1..max_len.
std::vector<RuleTable> enumerate_valid_rules(unsigned long max_p, std::size_t max_len);

// Every word over p symbols of length 1..max_len with a nonzero leftmost symbol.
std::vector<Word> enumerate_seeds(Radix p, std::size_t max_len);

// A uniformly drawn valid rule: p in [2, max_p], block lengths in [1, max_len].
RuleTable random_valid_rule(std::mt19937_64& rng, unsigned long max_p, std::size_t max_len);

CheckReport run_check(const CheckOptions& options);

}  // namespace subst
