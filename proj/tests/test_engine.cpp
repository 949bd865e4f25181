#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracle.hpp"
#include "subst/check.hpp"
#include "subst/engine.hpp"
#include "subst/numtheory.hpp"

using namespace subst;

namespace {

const std::map<char, std::string> kFibonacci{{'0', "0"}, {'1', "12"}, {'2', "1"}};
const std::map<char, std::string> kCantor{{'0', "000"}, {'1', "101"}};
const std::map<char, std::string> kThueMorse{{'0', "01"}, {'1', "10"}};

Word word(unsigned long p, const std::string& s) { return Word::parse(Radix(p), s); }

}  // namespace

TEST_CASE("Word basics") {
  const Word w = word(3, "121");
  CHECK(w.length() == 3);
  CHECK(w.numeral() == 16);
  CHECK(w.to_string() == "121");
  CHECK(Word::from_numeral(Radix(3), Natural(16), 5).to_string() == "00121");
  CHECK(Word::parse(Radix(40), "12 0 39").symbols() == std::vector<Symbol>{12, 0, 39});
  CHECK(Word::parse(Radix(40), "12 0 39").to_string() == "12 0 39");
  CHECK(Word::parse(Radix(16), "a0F").symbols() == std::vector<Symbol>{10, 0, 15});
  CHECK_THROWS_AS(word(2, "012"), WordError);
  CHECK_THROWS_AS(word(2, ""), WordError);
  CHECK_THROWS_AS(word(10, "1-2"), WordError);
  CHECK_THROWS_AS(Word::from_numeral(Radix(3), Natural(27), 3), WordError);
}

TEST_CASE("step_string") {
  CHECK(step_string(rules::thue_morse(), word(2, "0110")).to_string() == "01101001");
  CHECK(step_string(rules::cantor(), word(2, "101")).to_string() == "101000101");
  CHECK(step_string(rules::fibonacci(), word(3, "121")).to_string() == "12112");
  CHECK_THROWS_AS(step_string(rules::cantor(), word(3, "12")), WordError);
}

TEST_CASE("step_number") {
  // Oracle: substitute as strings, then read the result in radix p.
  const std::string fib_next = oracle::substitute(kFibonacci, "121");
  REQUIRE(fib_next == "12112");
  REQUIRE(oracle::value(fib_next, 3) == 149);
  const std::string cantor_next = oracle::substitute(kCantor, "101");
  REQUIRE(oracle::value(cantor_next, 2) == 325);

  CHECK(step_number(rules::fibonacci(), Natural(16), 3) == NumberedWord{Natural(149), 5});
  CHECK(step_number(rules::cantor(), Natural(5), 3) == NumberedWord{Natural(325), 9});

  for (const RuleTable& r : {rules::fibonacci(), rules::cantor()}) {
    for (Symbol k = 1; k < r.alphabet().value(); ++k) {
      const auto f = f_number(r, k);
      CHECK(step_number(r, Natural(k), 1) == NumberedWord{f.value, f.length});
    }
  }
}

TEST_CASE("step_number rejects what a bare numeral cannot represent") {
  CHECK_THROWS_AS(step_number(rules::thue_morse(), Natural(1), 1), RuleError);
  CHECK_THROWS_AS(step_number(rules::cantor(), Natural(1), 2), WordError);  // "01"
  CHECK_THROWS_AS(step_number(rules::cantor(), Natural(0), 1), WordError);
  CHECK_THROWS_AS(step_number(rules::cantor(), Natural(8), 3), WordError);  // needs 4 digits
}

TEST_CASE("step_constant_number") {
  const WolframCode cantor{Natural(40), 3, Radix(2)};
  CHECK(step_constant_number(cantor, Natural(1), 1) == NumberedWord{Natural(5), 3});
  CHECK(step_constant_number(cantor, Natural(5), 3) == NumberedWord{Natural(325), 9});
  CHECK(step_constant_number({Natural(2), 1, Radix(2)}, Natural(1), 1) == NumberedWord{Natural(1), 1});
  CHECK_THROWS_AS(step_constant_number({Natural(6), 2, Radix(2)}, Natural(1), 1), RuleError);
}

TEST_CASE("per-position law of constant-length rules") {
  // Symbol h + N j of w_{t+1}, counted from the low end of the numeral, is
  // block character N-1-h of the block for digit j of w_t.
  const RuleTable fig2 = decode_wolfram({Natural("74330023345"), 3, Radix(7)});
  for (const RuleTable& r : {rules::cantor(), rules::thue_morse(), fig2}) {
    const std::size_t n = *is_constant_length(r);
    const auto a = rule_vector(r);
    Word w = word(r.alphabet().value(), "1");
    for (int t = 0; t < 4; ++t) {
      const Word next = step_string(r, w);
      const std::size_t len = w.length();
      for (std::size_t j = 0; j < len; ++j) {
        const Symbol u = w.symbols()[len - 1 - j];  // digit j
        for (std::size_t h = 0; h < n; ++h) {
          const Symbol out = next.symbols()[next.length() - 1 - (h + n * j)];
          REQUIRE(out == substitution_operator(a, n, r.alphabet(), u, n - 1 - h));
        }
      }
      w = next;
    }
  }
}

TEST_CASE("run reproduces the classic sequences") {
  const Trajectory tm = run(rules::thue_morse(), word(2, "0"), {4, RunMode::Strings});
  CHECK(tm.words.back().to_string() == "0110100110010110");
  CHECK(tm.words.back().to_string() == oracle::iterate(kThueMorse, "0", 4));

  const Trajectory cantor = run(rules::cantor(), word(2, "1"), {3, RunMode::Both});
  CHECK(cantor.words.back().to_string() == "101000101000000000101000101");
  CHECK(cantor.lengths == std::vector<std::size_t>{1, 3, 9, 27});

  const Trajectory fib = run(rules::fibonacci(), word(3, "1"), {5, RunMode::Both});
  CHECK(fib.lengths == std::vector<std::size_t>{1, 2, 3, 5, 8, 13});
  CHECK(fib.words.back().to_string() == "1211212112112");
  for (std::size_t t = 0; t < fib.words.size(); ++t) {
    CHECK(fib.numerals[t] == oracle::value(oracle::iterate(kFibonacci, "1", static_cast<int>(t)), 3));
  }
}

TEST_CASE("run in numeral mode matches string mode") {
  const Trajectory s = run(rules::fibonacci(), word(3, "12"), {9, RunMode::Strings});
  const Trajectory n = run(rules::fibonacci(), word(3, "12"), {9, RunMode::Numbers});
  CHECK(s.words == n.words);
  CHECK(s.lengths == n.lengths);
  CHECK(n.numerals.size() == n.words.size());
  CHECK(s.numerals.empty());
}

TEST_CASE("run mode restrictions") {
  CHECK_THROWS_AS(run(rules::thue_morse(), word(2, "0"), {2, RunMode::Numbers}), RuleError);
  CHECK_THROWS_AS(run(rules::cantor(), word(2, "01"), {2, RunMode::Both}), WordError);
  CHECK_NOTHROW(run(rules::cantor(), word(2, "01"), {2, RunMode::Strings}));
  CHECK(run(rules::cantor(), word(2, "1"), {0, RunMode::Both}).words.size() == 1);
}

TEST_CASE("word-length cap truncates with a marker") {
  const Trajectory t = run(rules::cantor(), word(2, "1"), {10, RunMode::Strings, 100});
  CHECK(t.truncated);
  CHECK(t.steps() == 4);  // 81 fits, 243 would not
  CHECK(t.lengths.back() == 81);
  CHECK(t.requested_steps == 10);
  CHECK_FALSE(run(rules::cantor(), word(2, "1"), {4, RunMode::Strings, 81}).truncated);
}

TEST_CASE("max word length from the environment") {
  ::unsetenv("SUBST_MAX_WORD_LENGTH");
  CHECK(max_word_length_from_env() == kDefaultMaxWordLength);
  ::setenv("SUBST_MAX_WORD_LENGTH", "1234", 1);
  CHECK(max_word_length_from_env() == 1234);
  ::setenv("SUBST_MAX_WORD_LENGTH", "lots", 1);
  CHECK_THROWS(max_word_length_from_env());
  ::unsetenv("SUBST_MAX_WORD_LENGTH");
}

TEST_CASE("the 7-symbol rule: two steps and the full third iterate") {
  const RuleTable r = decode_wolfram({Natural("74330023345"), 3, Radix(7)});
  const Trajectory t = run(r, word(7, "1"), {3, RunMode::Strings});
  CHECK(t.words[1].to_string() == "625");
  CHECK(t.words[2].to_string() == "000256000");
  // Nine symbols in, 27 out: 0,0,0 -> 462 x3, 2 -> 256, 5 -> 000, 6 -> 000, 0,0,0 -> 462 x3.
  CHECK(t.words[3].to_string() == "462462462256000000462462462");
  CHECK(t.words[3].length() == 27);
}

TEST_CASE("growth ratios") {
  const Trajectory cantor = run(rules::cantor(), word(2, "1"), {5, RunMode::Numbers});
  for (const auto& g : growth_ratios(cantor)) {
    CHECK(g.floor_log_ratio == static_cast<long>(g.length_increase));
  }
  CHECK(growth_ratios(cantor)[0].ratio == mpq_class(5));

  const Trajectory fib = run(rules::fibonacci(), word(3, "1"), {8, RunMode::Numbers});
  const auto fg = growth_ratios(fib);
  const std::vector<std::size_t> increases{1, 1, 2, 3, 5, 8, 13, 21};
  for (std::size_t t = 0; t < fg.size(); ++t) {
    CHECK(fg[t].length_increase == increases[t]);
    CHECK(fg[t].floor_log_ratio == static_cast<long>(increases[t]));
  }

  const Trajectory id = run(rules::identity(Radix(3)), word(3, "21"), {3, RunMode::Numbers});
  for (const auto& g : growth_ratios(id)) {
    CHECK(g.ratio == 1);
    CHECK(g.floor_log_ratio == 0);
  }
  CHECK_THROWS(growth_ratios(run(rules::cantor(), word(2, "1"), {2, RunMode::Strings})));
}

TEST_CASE("floor log of the growth ratio brackets the length increase") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const RuleTable r = random_valid_rule(rng, 4, 3);
    const Trajectory t = run(r, word(r.alphabet().value(), "1"), {5, RunMode::Numbers});
    for (const auto& g : growth_ratios(t)) {
      const long d = static_cast<long>(g.length_increase);
      REQUIRE((g.floor_log_ratio == d || g.floor_log_ratio == d - 1));
    }
  }
}

TEST_CASE("small exhaustive representation equivalence") {
  for (const RuleTable& r : enumerate_valid_rules(2, 3)) {
    for (const Word& seed : enumerate_seeds(r.alphabet(), 3)) {
      Word w = seed;
      NumberedWord nw{seed.numeral(), seed.length()};
      for (int t = 0; t < 4; ++t) {
        w = step_string(r, w);
        nw = step_number(r, nw.numeral, nw.length);
        REQUIRE(nw.length == w.length());
        REQUIRE(oracle::spell(nw.numeral, 2) == w.to_string());
      }
    }
  }
}

TEST_CASE("length additivity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const RuleTable r = random_valid_rule(rng, 5, 4);
    Word w = Word::parse(r.alphabet(), "1");
    for (int t = 0; t < 5; ++t) {
      std::size_t expected = 0;
      for (Symbol s = 0; s < r.alphabet().value(); ++s) {
        expected += static_cast<std::size_t>(std::count(w.symbols().begin(), w.symbols().end(), s)) * r.length(s);
      }
      w = step_string(r, w);
      REQUIRE(w.length() == expected);
    }
  }
}

TEST_CASE("large numeral steps agree with the array route") {
  const Trajectory t = run(rules::fibonacci(), word(3, "1"), {22, RunMode::Both});
  CHECK(t.lengths.back() == 46368);
  const Trajectory c = run(rules::cantor(), word(2, "1"), {9, RunMode::Both});
  CHECK(c.lengths.back() == 19683);
}

TEST_CASE("determinism") {
  const Trajectory a = run(rules::fibonacci(), word(3, "1"), {12, RunMode::Both});
  const Trajectory b = run(rules::fibonacci(), word(3, "1"), {12, RunMode::Both});
  CHECK(a.words == b.words);
  CHECK(a.numerals == b.numerals);
}
