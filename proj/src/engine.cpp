#include "subst/engine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "subst/numtheory.hpp"

namespace subst {

namespace {

constexpr std::size_t kHornerLeaf = 64;

void require_same_alphabet(const RuleTable& rule, Radix p) {
  if (rule.alphabet() != p) {
    throw WordError("word radix " + std::to_string(p.value()) + " does not match rule alphabet " +
                    std::to_string(rule.alphabet().value()));
  }
}

// Digits of a padded to `length`, least significant first; the top digit
// must be nonzero.
std::vector<Symbol> numeral_digits(Radix p, const Natural& a, std::size_t length) {
  if (length == 0) throw WordError("word length must be >= 1");
  if (sgn(a) < 0) throw WordError("negative numeral");
  std::vector<Symbol> ds = to_digits(p, a);
  if (ds.size() > length) {
    throw WordError("numeral " + a.get_str() + " has more than " + std::to_string(length) +
                    " digits");
  }
  ds.resize(length, 0);
  if (ds.back() == 0) {
    throw WordError("leftmost symbol is 0: a bare numeral cannot carry leading zeros");
  }
  return ds;
}

// sum over m in [lo, hi) of p^(offset[m] - offset[lo]) f(d_m).
class NumeralAssembler {
 public:
  NumeralAssembler(const RuleTable& rule, const std::vector<Symbol>& digits)
      : digits_(digits), offsets_(digits.size() + 1, 0) {
    const Radix p = rule.alphabet();
    for (Symbol k = 0; k < p.value(); ++k) {
      blocks_.push_back(f_number(rule, k));
      block_scale_.push_back(power(p, blocks_.back().length));
    }
    for (std::size_t m = 0; m < digits.size(); ++m) {
      offsets_[m + 1] = offsets_[m] + blocks_[digits[m]].length;
    }
    p_ = p.value();
  }

  std::size_t total_length() const { return offsets_.back(); }

  Natural sum(std::size_t lo, std::size_t hi) const {
    if (hi - lo <= kHornerLeaf) {
      // Innermost concatenations: acc = J_p(f(d_m), acc) read from the top.
      Natural acc = 0;
      for (std::size_t m = hi; m-- > lo;) {
        const auto& f = blocks_[digits_[m]];
        acc *= block_scale_[digits_[m]];
        acc += f.value;
      }
      return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    Natural upper = sum(mid, hi);
    Natural shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), p_, offsets_[mid] - offsets_[lo]);
    upper *= shift;
    upper += sum(lo, mid);
    return upper;
  }

 private:
  const std::vector<Symbol>& digits_;
  std::vector<std::size_t> offsets_;
  std::vector<BlockNumeral> blocks_;
  std::vector<Natural> block_scale_;
  unsigned long p_ = 2;
};

}  // namespace

Word::Word(Radix p, std::vector<Symbol> symbols) : p_(p), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw WordError("a word needs at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= p_.value()) {
      throw WordError("symbol " + std::to_string(symbols_[i]) + " at position " +
                      std::to_string(i) + " is outside [0, " + std::to_string(p_.value() - 1) +
                      "]");
    }
  }
}

Word Word::from_numeral(Radix p, const Natural& a, std::size_t length) {
  if (length == 0) throw WordError("word length must be >= 1");
  std::vector<Symbol> ds = to_digits(p, a);
  if (ds.size() > length) {
    throw WordError("numeral " + a.get_str() + " does not fit in " + std::to_string(length) +
                    " symbols");
  }
  ds.resize(length, 0);
  std::reverse(ds.begin(), ds.end());
  return Word(p, std::move(ds));
}

Word Word::parse(Radix p, std::string_view text) {
  std::vector<Symbol> symbols;
  if (text.find_first_of(" \t,") != std::string_view::npos) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream is(normalized);
    for (std::string tok; is >> tok;) {
      unsigned long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw WordError("bad symbol '" + tok + "' in word");
      }
      symbols.push_back(static_cast<Symbol>(v));
    }
  } else {
    for (char c : text) {
      const auto u = static_cast<unsigned char>(c);
      if (std::isdigit(u)) {
        symbols.push_back(static_cast<Symbol>(c - '0'));
      } else if (std::isalpha(u)) {
        symbols.push_back(static_cast<Symbol>(std::toupper(u) - 'A' + 10));
      } else {
        throw WordError(std::string("bad symbol character '") + c + "' in word");
      }
    }
  }
  return Word(p, std::move(symbols));
}

Natural Word::numeral() const {
  std::vector<Symbol> lsb_first(symbols_.rbegin(), symbols_.rend());
  return from_digits(p_, lsb_first);
}

std::string Word::to_string() const {
  if (p_.value() <= 36) {
    std::string out(symbols_.size(), '0');
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      out[i] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"[symbols_[i]];
    }
    return out;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i) os << (i ? " " : "") << symbols_[i];
  return os.str();
}

RepresentationMismatch::RepresentationMismatch(std::size_t step, const std::string& detail)
    : std::runtime_error("representation mismatch at step " + std::to_string(step) + ": " +
                         detail),
      step_(step) {}

std::size_t next_length(const RuleTable& rule, const Word& w) {
  require_same_alphabet(rule, w.radix());
  std::size_t n = 0;
  for (Symbol s : w.symbols()) n += rule.length(s);
  return n;
}

Word step_string(const RuleTable& rule, const Word& w) {
  require_same_alphabet(rule, w.radix());
  require_well_formed(rule);
  std::vector<Symbol> out;
  out.reserve(next_length(rule, w));
  for (Symbol s : w.symbols()) {
    const Block& b = rule.block(s);
    out.insert(out.end(), b.begin(), b.end());
  }
  return Word(w.radix(), std::move(out));
}

NumberedWord step_number(const RuleTable& rule, const Natural& a, std::size_t length) {
  require_valid(rule);
  const std::vector<Symbol> digits = numeral_digits(rule.alphabet(), a, length);
  NumeralAssembler assembler(rule, digits);
  return {assembler.sum(0, digits.size()), assembler.total_length()};
}

NumberedWord step_constant_number(const WolframCode& wc, const Natural& a, std::size_t length) {
  const RuleTable rule = decode_wolfram(wc);
  require_valid(rule);
  const std::vector<Symbol> table = rule_vector(rule);
  const std::vector<Symbol> digits = numeral_digits(wc.alphabet, a, length);
  const std::size_t n = wc.block_length;
  std::vector<Symbol> out(n * digits.size());
  for (std::size_t m = 0; m < digits.size(); ++m) {
    for (std::size_t h = 0; h < n; ++h) {
      // Digit weight p^(h + N m); its character sits N-1-h from the block's left.
      out[h + n * m] = table[(n - 1 - h) + n * digits[m]];
    }
  }
  return {from_digits(wc.alphabet, out), out.size()};
}

std::size_t max_word_length_from_env() {
  const char* v = std::getenv("SUBST_MAX_WORD_LENGTH");
  if (v == nullptr || *v == '\0') return kDefaultMaxWordLength;
  std::size_t cap = 0;
  const std::string_view text(v);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    throw std::invalid_argument("SUBST_MAX_WORD_LENGTH must be a positive integer");
  }
  return cap;
}

Trajectory run(const RuleTable& rule, const Word& seed, const RunOptions& options) {
  require_same_alphabet(rule, seed.radix());
  const bool strings = options.mode != RunMode::Numbers;
  const bool numbers = options.mode != RunMode::Strings;
  require_well_formed(rule);
  if (numbers) {
    require_valid(rule);
    if (seed.leftmost() == 0) {
      throw WordError("numeral mode needs a seed whose leftmost symbol is nonzero");
    }
  }

  Trajectory traj{rule, {seed}, {seed.length()}, {}, options.steps, false};
  if (numbers) traj.numerals.push_back(seed.numeral());

  for (std::size_t t = 0; t < options.steps; ++t) {
    const Word& current = traj.words.back();
    if (next_length(rule, current) > options.max_word_length) {
      traj.truncated = true;
      break;
    }
    std::optional<Word> next;
    if (strings) next = step_string(rule, current);
    if (numbers) {
      NumberedWord nw = step_number(rule, traj.numerals.back(), current.length());
      if (next) {
        if (nw.length != next->length()) {
          throw RepresentationMismatch(t + 1, "numeral path length " + std::to_string(nw.length) +
                                                  " vs symbol path length " +
                                                  std::to_string(next->length()));
        }
        if (Word::from_numeral(rule.alphabet(), nw.numeral, nw.length) != *next) {
          throw RepresentationMismatch(t + 1, "numeral " + nw.numeral.get_str() +
                                                  " does not spell " + next->to_string());
        }
      } else {
        next = Word::from_numeral(rule.alphabet(), nw.numeral, nw.length);
      }
      traj.numerals.push_back(std::move(nw.numeral));
    }
    traj.lengths.push_back(next->length());
    traj.words.push_back(std::move(*next));
  }
  return traj;
}

std::vector<GrowthStep> growth_ratios(const Trajectory& traj) {
  if (traj.numerals.size() != traj.words.size()) {
    throw std::invalid_argument("growth ratios need a trajectory computed in numeral mode");
  }
  const Radix p = traj.rule.alphabet();
  std::vector<GrowthStep> out;
  for (std::size_t t = 0; t + 1 < traj.numerals.size(); ++t) {
    const Natural& a = traj.numerals[t];
    const Natural& b = traj.numerals[t + 1];
    if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("zero numeral in trajectory");
    GrowthStep g;
    g.ratio = mpq_class(b, a);
    g.ratio.canonicalize();
    // floor(log_p(b/a)) = floor_log(b // a) when b >= a, else -(ceil(log_p(a/b))).
    if (b >= a) {
      g.floor_log_ratio = static_cast<long>(floor_log(p, Natural(b / a)));
    } else {
      long k = 0;
      Natural scaled = b;
      while (scaled < a) {
        scaled *= p.value();
        ++k;
      }
      g.floor_log_ratio = -k;
    }
    g.length_increase = traj.lengths[t + 1] - traj.lengths[t];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace subst
