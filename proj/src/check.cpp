#include "subst/check.hpp"

#include <algorithm>
#include <thread>

#include "subst/numtheory.hpp"
#include "subst/rule_io.hpp"

namespace subst {

namespace {

struct Case {
  const RuleTable* rule;
  Word seed;
  std::size_t steps;
  bool sampled;
};

struct CaseResult {
  std::size_t steps = 0;
  std::size_t constant_steps = 0;
  bool grew = false;
  std::optional<Counterexample> failure;
  bool second_law_failure = false;
};

// Reads each block with position h weighted by p^h (leftmost character least
// significant), the mirror image of the correct orientation.
NumberedWord faulty_orientation_step(const RuleTable& rule, const Natural& a, std::size_t length) {
  const unsigned long p = rule.alphabet().value();
  std::vector<Symbol> ds = to_digits(rule.alphabet(), a);
  ds.resize(length, 0);
  NumberedWord out{0, 0};
  for (std::size_t m = length; m-- > 0;) {
    const Block& b = rule.block(ds[m]);
    for (std::size_t h = b.size(); h-- > 0;) {
      out.numeral *= p;
      out.numeral += b[h];
    }
    out.length += b.size();
  }
  return out;
}

CaseResult check_case(const Case& c, Fault fault) {
  CaseResult r;
  const RuleTable& rule = *c.rule;
  const Radix p = rule.alphabet();
  const auto constant = is_constant_length(rule);
  std::optional<WolframCode> wc;
  if (constant) wc = encode_wolfram(rule);

  auto fail = [&](std::size_t step, std::string detail) {
    r.failure = Counterexample{c.sampled ? "sampled" : "exhaustive", format_rule(rule),
                               c.seed.to_string(), step, std::move(detail)};
  };

  Word word = c.seed;
  Natural numeral = word.numeral();
  for (std::size_t t = 1; t <= c.steps; ++t) {
    bool has_long_block = false;
    for (Symbol s : word.symbols()) has_long_block |= rule.length(s) > 1;

    Word next = step_string(rule, word);
    NumberedWord nw = fault == Fault::Orientation ? faulty_orientation_step(rule, numeral, word.length())
                                                  : step_number(rule, numeral, word.length());
    ++r.steps;
    if (nw.length != next.length() ||
        Word::from_numeral(p, nw.numeral, nw.length) != next) {
      fail(t, "numeral route gave " + nw.numeral.get_str() + " (length " +
                  std::to_string(nw.length) + "), symbol route gave " + next.to_string());
      return r;
    }
    if (wc) {
      ++r.constant_steps;
      if (step_constant_number(*wc, numeral, word.length()) != nw) {
        fail(t, "constant-length numeral route disagrees");
        return r;
      }
    }
    // Length never shrinks, and grows exactly when a long block is used.
    const bool grew = next.length() > word.length();
    if (next.length() < word.length() || grew != has_long_block) {
      r.second_law_failure = true;
      fail(t, "length " + std::to_string(word.length()) + " -> " + std::to_string(next.length()));
      r.failure->family = "second-law";
      return r;
    }
    r.grew |= grew;
    word = std::move(next);
    numeral = std::move(nw.numeral);
  }
  return r;
}

void for_each_block(unsigned long p, std::size_t len, bool zero_block, std::vector<Block>& out) {
  if (zero_block) {
    out.push_back(Block(len, 0));
    return;
  }
  Block b(len, 0);
  // Odometer over positions 1..len-1 with position 0 in [1, p-1].
  std::size_t total = p - 1;
  for (std::size_t i = 1; i < len; ++i) total *= p;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = len; i-- > 1;) {
      b[i] = static_cast<Symbol>(rest % p);
      rest /= p;
    }
    b[0] = static_cast<Symbol>(1 + rest);
    out.push_back(b);
  }
}

std::vector<Block> candidate_blocks(unsigned long p, std::size_t max_len, bool zero_block) {
  std::vector<Block> out;
  for (std::size_t len = 1; len <= max_len; ++len) for_each_block(p, len, zero_block, out);
  return out;
}

void run_cases(const std::vector<Case>& cases, Fault fault, unsigned workers,
               std::vector<CaseResult>& results) {
  results.assign(cases.size(), {});
  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, cases.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) results[i] = check_case(cases[i], fault);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cases.size(); i += threads) results[i] = check_case(cases[i], fault);
    });
  }
}

void record(CheckReport& report, const CaseResult& r) {
  report.steps_checked += r.steps;
  report.constant_steps_checked += r.constant_steps;
  if (r.failure) {
    if (r.second_law_failure) {
      ++report.second_law_violations;
    } else {
      ++report.mismatches;
    }
    if (!report.first_failure) report.first_failure = r.failure;
  }
}

void check_codec(CheckReport& report, const CheckOptions& options) {
  auto round_trip = [&](const Natural& code, std::size_t n, Radix p) {
    ++report.codec_codes;
    const WolframCode wc{code, n, p};
    const RuleTable rule = decode_wolfram(wc);
    if (encode_wolfram(rule, n) != wc) {
      ++report.codec_failures;
      if (!report.first_failure) {
        report.first_failure = Counterexample{"codec", format_rule(rule), "", 0,
                                              "code " + code.get_str() + " does not round-trip"};
      }
    }
  };
  for (unsigned long p : {2ul, 3ul}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Natural count = wolfram_code_count(n, Radix(p));
      for (Natural code = 0; code < count; ++code) round_trip(code, n, Radix(p));
    }
  }
  gmp_randclass rand(gmp_randinit_mt);
  rand.seed(static_cast<unsigned long>(options.rng_seed));
  const Natural count = wolfram_code_count(3, Radix(7));
  for (std::size_t i = 0; i < options.codec_samples; ++i) {
    round_trip(Natural(rand.get_z_range(count)), 3, Radix(7));
  }
}

}  // namespace

std::vector<RuleTable> enumerate_valid_rules(unsigned long max_p, std::size_t max_len) {
  std::vector<RuleTable> out;
  for (unsigned long p = 2; p <= max_p; ++p) {
    const auto zeros = candidate_blocks(p, max_len, true);
    const auto others = candidate_blocks(p, max_len, false);
    std::vector<std::size_t> pick(p, 0);
    const std::size_t radix = others.size();
    while (true) {
      std::vector<Block> blocks(p);
      blocks[0] = zeros[pick[0]];
      for (std::size_t k = 1; k < p; ++k) blocks[k] = others[pick[k]];
      out.emplace_back(Radix(p), std::move(blocks));
      std::size_t k = p;
      while (k-- > 0) {
        const std::size_t limit = k == 0 ? zeros.size() : radix;
        if (++pick[k] < limit) break;
        pick[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

std::vector<Word> enumerate_seeds(Radix p, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Block> blocks;
    for_each_block(p.value(), len, false, blocks);
    for (auto& b : blocks) out.emplace_back(p, std::move(b));
  }
  return out;
}

RuleTable random_valid_rule(std::mt19937_64& rng, unsigned long max_p, std::size_t max_len) {
  std::uniform_int_distribution<unsigned long> alphabet(2, std::max(2ul, max_p));
  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_len));
  const unsigned long p = alphabet(rng);
  std::uniform_int_distribution<Symbol> lead(1, static_cast<Symbol>(p - 1));
  std::uniform_int_distribution<Symbol> any(0, static_cast<Symbol>(p - 1));
  std::vector<Block> blocks(p);
  blocks[0] = Block(length(rng), 0);
  for (std::size_t k = 1; k < p; ++k) {
    Block b(length(rng));
    b[0] = lead(rng);
    for (std::size_t i = 1; i < b.size(); ++i) b[i] = any(rng);
    blocks[k] = std::move(b);
  }
  return RuleTable(Radix(p), std::move(blocks));
}

CheckReport run_check(const CheckOptions& options) {
  CheckReport report;
  std::vector<CaseResult> results;

  if (options.exhaustive) {
    const auto rules = enumerate_valid_rules(options.exhaustive_max_p, options.exhaustive_max_len);
    report.exhaustive_rules = rules.size();
    std::vector<Case> cases;
    std::vector<std::size_t> rule_of_case;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (Word& seed : enumerate_seeds(rules[i].alphabet(), options.exhaustive_seed_len)) {
        cases.push_back({&rules[i], std::move(seed), options.exhaustive_steps, false});
        rule_of_case.push_back(i);
      }
    }
    report.exhaustive_cases = cases.size();
    run_cases(cases, options.fault, options.workers, results);

    // Across all seeds, a rule grows somewhere iff some block is longer than 1.
    std::vector<bool> grew(rules.size(), false);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      record(report, results[i]);
      if (results[i].grew) grew[rule_of_case[i]] = true;
    }
    if (options.exhaustive_steps > 0) {
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const bool all_unit = is_constant_length(rules[i]) == std::optional<std::size_t>(1);
        if (grew[i] == all_unit) {
          ++report.second_law_violations;
          if (!report.first_failure) {
            report.first_failure = Counterexample{"second-law", format_rule(rules[i]), "", 0,
                                                  "length growth does not match block lengths"};
          }
        }
      }
    }
  }

  if (options.samples > 0) {
    std::mt19937_64 rng(options.rng_seed);
    std::vector<RuleTable> rules;
    std::vector<Case> cases;
    rules.reserve(options.samples);
    for (std::size_t i = 0; i < options.samples; ++i) {
      rules.push_back(random_valid_rule(rng, options.sample_max_p, options.sample_max_len));
    }
    for (const RuleTable& rule : rules) {
      const unsigned long p = rule.alphabet().value();
      std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, options.sample_seed_len));
      std::uniform_int_distribution<Symbol> lead(1, static_cast<Symbol>(p - 1));
      std::uniform_int_distribution<Symbol> any(0, static_cast<Symbol>(p - 1));
      std::vector<Symbol> s(len(rng));
      s[0] = lead(rng);
      for (std::size_t i = 1; i < s.size(); ++i) s[i] = any(rng);
      cases.push_back({&rule, Word(rule.alphabet(), std::move(s)), options.sample_steps, true});
    }
    report.sampled_cases = cases.size();
    run_cases(cases, options.fault, options.workers, results);
    for (const auto& r : results) record(report, r);
  }

  if (options.codec) check_codec(report, options);
  return report;
}

}  // namespace subst
