#include "subst/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "subst/numtheory.hpp"

namespace subst {

namespace {

constexpr double kBoltzmannSwitch = 1e-12;

std::size_t ones_in_block_one(const RuleTable& rule) {
  return static_cast<std::size_t>(std::count(rule.block(1).begin(), rule.block(1).end(), 1u));
}

bool is_single_one(const Word& w) { return w.length() == 1 && w.leftmost() == 1; }

}  // namespace

std::size_t count_symbol(const Word& w, Symbol s) {
  return static_cast<std::size_t>(std::count(w.symbols().begin(), w.symbols().end(), s));
}

std::string closed_form_ineligibility(const RuleTable& rule) {
  if (rule.alphabet().value() != 2) return "closed form needs a two-symbol alphabet";
  const Block& zero = rule.block(0);
  if (zero.empty() || std::any_of(zero.begin(), zero.end(), [](Symbol s) { return s != 0; })) {
    return "closed form needs symbol 0 to map to a block of zeros";
  }
  const auto n = is_constant_length(rule);
  if (!n) return "closed form needs a constant-length rule";
  if (*n < 2) return "closed form needs block length >= 2";
  if (ones_in_block_one(rule) == 0) return "dimension undefined: block of 1 has no 1 (pattern dies)";
  return {};
}

Natural predicted_ones(const RuleTable& rule, std::size_t t) {
  if (rule.alphabet().value() != 2) throw PreconditionError("predicted_ones needs p = 2");
  const Block& zero = rule.block(0);
  if (std::any_of(zero.begin(), zero.end(), [](Symbol s) { return s != 0; })) {
    throw PreconditionError("predicted_ones needs symbol 0 to map to zeros only");
  }
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), ones_in_block_one(rule), t);
  return r;
}

double box_dimension_closed(const RuleTable& rule) {
  const std::string why = closed_form_ineligibility(rule);
  if (!why.empty()) throw PreconditionError(why);
  const double s = static_cast<double>(ones_in_block_one(rule));
  const double n = static_cast<double>(rule.length(1));
  return std::log(s) / std::log(n);
}

std::vector<DimensionSample> box_dimension_empirical(const Trajectory& traj) {
  if (traj.words.empty() || !is_single_one(traj.words.front())) {
    throw PreconditionError("empirical dimension needs a trajectory seeded with \"1\"");
  }
  std::vector<DimensionSample> out;
  for (std::size_t t = 1; t < traj.words.size(); ++t) {
    const std::size_t n1 = count_symbol(traj.words[t], 1);
    const std::size_t w = traj.words[t].length();
    DimensionSample d{t, std::nullopt};
    // W_t = 1 would be 0/0; only reachable with all-length-1 rules.
    if (n1 > 0 && w > 1) d.value = std::log(static_cast<double>(n1)) / std::log(static_cast<double>(w));
    out.push_back(d);
  }
  return out;
}

double log_natural(const Natural& n) {
  if (sgn(n) <= 0) throw std::domain_error("log of a non-positive number");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53) return std::log(n.get_d());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double tsallis_entropy(const Natural& w, double q) {
  if (sgn(w) <= 0) throw std::domain_error("Tsallis entropy needs W >= 1");
  const double ln_w = log_natural(w);
  if (std::abs(q - 1.0) < kBoltzmannSwitch) return ln_w;
  const double one_minus_q = 1.0 - q;
  return std::expm1(one_minus_q * ln_w) / one_minus_q;
}

Natural radix_economy(Radix eta, const Natural& a) {
  if (sgn(a) <= 0) throw std::domain_error("radix economy needs A >= 1");
  return Natural(eta.value()) * Natural(static_cast<unsigned long>(num_digits(eta, a)));
}

Radix optimal_radix(const Natural& a, Radix eta_max) {
  Radix best(2);
  Natural best_cost = radix_economy(best, a);
  for (unsigned long e = 3; e <= eta_max.value(); ++e) {
    Natural cost = radix_economy(Radix(e), a);
    if (cost < best_cost) {
      best = Radix(e);
      best_cost = std::move(cost);
    }
  }
  return best;
}

std::string to_string(SecondLawVerdict v) {
  switch (v) {
    case SecondLawVerdict::Reversible: return "reversible";
    case SecondLawVerdict::LengthPreserving: return "length-preserving";
    case SecondLawVerdict::Expanding: return "expanding";
  }
  return "unknown";
}

SecondLawReport second_law_report(const Trajectory& traj) {
  if (traj.words.empty()) throw std::invalid_argument("empty trajectory");
  const RuleTable& rule = traj.rule;
  SecondLawReport r{};
  if (is_reversible(rule)) {
    r.verdict = SecondLawVerdict::Reversible;
  } else if (is_constant_length(rule) == std::optional<std::size_t>(1)) {
    r.verdict = SecondLawVerdict::LengthPreserving;
  } else {
    r.verdict = SecondLawVerdict::Expanding;
  }
  r.non_decreasing = true;
  for (std::size_t t = 0; t + 1 < traj.words.size(); ++t) {
    std::size_t exponent = 0;
    for (Symbol s : traj.words[t].symbols()) exponent += rule.length(s) - 1;
    r.step_exponents.push_back(exponent);
    if (traj.lengths[t + 1] < traj.lengths[t]) r.non_decreasing = false;
  }
  return r;
}

AnalysisReport analyze(const Trajectory& traj, const AnalysisOptions& options) {
  if (traj.words.empty()) throw std::invalid_argument("empty trajectory");
  const RuleTable& rule = traj.rule;
  const auto p = rule.alphabet().value();
  AnalysisReport rep;
  for (const Word& w : traj.words) {
    std::vector<std::size_t> c(p, 0);
    for (Symbol s : w.symbols()) ++c[s];
    rep.total_boxes.push_back(w.length());
    rep.ones.push_back(p > 1 ? c[1] : 0);
    rep.counts.push_back(std::move(c));
  }

  rep.closed_form_note = closed_form_ineligibility(rule);
  if (rep.closed_form_note.empty() && !is_single_one(traj.words.front())) {
    rep.closed_form_note = "closed form needs the seed \"1\"";
  }
  if (rep.closed_form_note.empty()) rep.dimension_closed = box_dimension_closed(rule);

  if (is_single_one(traj.words.front())) {
    rep.dimension_empirical = box_dimension_empirical(traj);
  }

  if (options.q_override) {
    rep.q = options.q_override;
    rep.q_source = QSource::Override;
  } else if (rep.dimension_closed) {
    rep.q = rep.dimension_closed;
    rep.q_source = QSource::Closed;
  } else {
    for (auto it = rep.dimension_empirical.rbegin(); it != rep.dimension_empirical.rend(); ++it) {
      if (it->value) {
        rep.q = it->value;
        rep.q_source = QSource::Empirical;
        break;
      }
    }
  }

  for (std::size_t w : rep.total_boxes) {
    const Natural big(static_cast<unsigned long>(w));
    rep.boltzmann.push_back(log_natural(big));
    if (rep.q) rep.tsallis.push_back(tsallis_entropy(big, *rep.q));
  }

  rep.second_law = second_law_report(traj);

  if (options.radix_table) {
    const Natural last =
        traj.numerals.size() == traj.words.size() ? traj.numerals.back() : traj.words.back().numeral();
    if (sgn(last) > 0) {
      for (unsigned long e = 2; e <= options.eta_max; ++e) {
        rep.radix_economy.push_back({Radix(e), radix_economy(Radix(e), last)});
      }
      rep.optimal_radix = optimal_radix(last, Radix(std::max(2ul, options.eta_max)));
    }
  }
  return rep;
}

}  // namespace subst
