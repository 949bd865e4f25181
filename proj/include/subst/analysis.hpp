#pragma once

// Quantities derived from trajectories: symbol counts, box-counting dimension
// and entropic parameter, Tsallis/Boltzmann entropy, radix economy and the
// length-monotonicity ("second law") verdict.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subst/engine.hpp"

namespace subst {

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::size_t count_symbol(const Word& w, Symbol s);

// s^t where s is the number of 1s in block 1. Needs p = 2 and a block of
// zeros for symbol 0, so every 1 descends from a 1.
Natural predicted_ones(const RuleTable& rule, std::size_t t);

// ln s / ln N for the rules accepted by predicted_ones that also have
// constant length N >= 2. Throws PreconditionError when s = 0.
double box_dimension_closed(const RuleTable& rule);

// Empty string when the closed form applies, otherwise the reason it does not.
std::string closed_form_ineligibility(const RuleTable& rule);

struct DimensionSample {
  std::size_t step;
  std::optional<double> value;  // empty when no 1 survives
};

// ln N1_t / ln W_t for t = 1..T of a trajectory seeded with the single
// symbol 1.
std::vector<DimensionSample> box_dimension_empirical(const Trajectory& traj);

// Natural log of an arbitrarily large natural.
double log_natural(const Natural& n);

// (W^(1-q) - 1)/(1 - q); ln W at q = 1 and within 1e-12 of it.
double tsallis_entropy(const Natural& w, double q);

// eta * (1 + floor(log_eta a)), exact. Throws for a = 0.
Natural radix_economy(Radix eta, const Natural& a);

// argmin over eta in [2, eta_max] of radix_economy, smallest eta on ties.
Radix optimal_radix(const Natural& a, Radix eta_max);

enum class SecondLawVerdict { Reversible, LengthPreserving, Expanding };

std::string to_string(SecondLawVerdict v);

struct SecondLawReport {
  SecondLawVerdict verdict;
  bool non_decreasing;                       // lengths never shrink
  std::vector<std::size_t> step_exponents;   // sum_j (L_{s_j} - 1) per step
};

SecondLawReport second_law_report(const Trajectory& traj);

struct RadixEconomyRow {
  Radix eta;
  Natural economy;
};

struct AnalysisOptions {
  bool radix_table = false;
  unsigned long eta_max = 36;
  std::optional<double> q_override;
};

enum class QSource { Closed, Empirical, Override, None };

struct AnalysisReport {
  std::vector<std::vector<std::size_t>> counts;  // counts[t][s]
  std::vector<std::size_t> total_boxes;          // W_t
  std::vector<std::size_t> ones;                 // N1_t
  std::optional<double> dimension_closed;
  std::string closed_form_note;                  // why the closed form is absent
  std::vector<DimensionSample> dimension_empirical;
  std::optional<double> q;                       // D / D*, D* = 1
  QSource q_source = QSource::None;
  std::vector<double> tsallis;                   // S_q(W_t), empty without q
  std::vector<double> boltzmann;                 // ln W_t
  SecondLawReport second_law;
  std::vector<RadixEconomyRow> radix_economy;    // for the final numeral
  std::optional<Radix> optimal_radix;
};

AnalysisReport analyze(const Trajectory& traj, const AnalysisOptions& options = {});

}  // namespace subst
