#include "subst/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "subst/analysis.hpp"
#include "subst/check.hpp"
#include "subst/digest.hpp"
#include "subst/engine.hpp"
#include "subst/numtheory.hpp"
#include "subst/render.hpp"
#include "subst/rule_io.hpp"

namespace subst::cli {

namespace {

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// key<TAB>value or aligned "key: value" depending on --porcelain.
class Emitter {
 public:
  Emitter(std::ostream& out, bool porcelain) : out_(out), porcelain_(porcelain) {}
  bool porcelain() const { return porcelain_; }
  void kv(const std::string& key, const std::string& value) {
    if (porcelain_) {
      out_ << key << '\t' << value << '\n';
    } else {
      out_ << key << ": " << value << '\n';
    }
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool porcelain_;
};

struct RuleSource {
  std::string file;
  std::string code;
  std::size_t blocklen = 0;
  unsigned long alphabet = 0;

  void attach(CLI::App* cmd, bool positional_file = false) {
    auto* f = cmd->add_option("--rule", file, "rule file")->check(CLI::ExistingFile);
    if (positional_file) cmd->add_option("rulefile", file, "rule file")->check(CLI::ExistingFile);
    auto* c = cmd->add_option("--code", code, "Wolfram code of a constant-length rule");
    auto* n = cmd->add_option("--blocklen", blocklen, "block length N")->check(CLI::PositiveNumber);
    auto* p = cmd->add_option("--alphabet", alphabet, "alphabet size p")->check(CLI::Range(2ul, 1ul << 20));
    c->needs(n)->needs(p);
    f->excludes(c);
  }

  RuleTable load() const {
    if (!file.empty() && !code.empty()) throw CliError(kUsage, "give either a rule file or --code, not both");
    if (!file.empty()) return load_rule_file(file);
    if (!code.empty()) return decode_wolfram({parse_natural(code), blocklen, Radix(alphabet)});
    throw CliError(kUsage, "no rule given: use --rule FILE or --code C --blocklen N --alphabet P");
  }
};

std::string describe_rule(const RuleTable& rule) {
  std::ostringstream os;
  os << "p=" << rule.alphabet().value();
  if (const auto n = is_constant_length(rule)) {
    os << " N=" << *n;
    try {
      os << " code=" << encode_wolfram(rule).code.get_str() << "_{" << *n << ';'
         << rule.alphabet().value() << '}';
    } catch (const RuleError&) {
    }
  } else {
    os << " non-constant length";
  }
  os << (validate(rule).empty() ? " (numeral map: ok)" : " (numeral map: not applicable)");
  return os.str();
}

RunMode parse_mode(const std::string& m) {
  if (m == "string") return RunMode::Strings;
  if (m == "number") return RunMode::Numbers;
  return RunMode::Both;
}

std::size_t resolve_cap(std::size_t flag) { return flag ? flag : max_word_length_from_env(); }

void report_truncation(const Trajectory& traj, std::ostream& err) {
  err << "word-length cap reached: stopped after " << traj.steps() << " of "
      << traj.requested_steps << " steps\n";
}

// ---------------------------------------------------------------- decode
int cmd_decode(Emitter& em, const std::string& code, std::size_t n, unsigned long p) {
  const RuleTable rule = decode_wolfram({parse_natural(code), n, Radix(p)});
  if (em.porcelain()) {
    em.kv("alphabet", std::to_string(p));
    for (Symbol k = 0; k < p; ++k) {
      std::string block;
      for (Symbol s : rule.block(k)) block += (block.empty() ? "" : " ") + std::to_string(s);
      em.kv("block." + std::to_string(k), block);
    }
  } else {
    em.raw() << format_rule(rule);
  }
  return kOk;
}

// ---------------------------------------------------------------- encode
int cmd_encode(Emitter& em, const RuleTable& rule) {
  if (!is_constant_length(rule)) {
    throw CliError(kValidation, "non-constant length: blocks differ in length, no Wolfram code exists");
  }
  const WolframCode wc = encode_wolfram(rule);
  if (em.porcelain()) {
    em.kv("code", wc.code.get_str());
    em.kv("blocklen", std::to_string(wc.block_length));
    em.kv("alphabet", std::to_string(wc.alphabet.value()));
  } else {
    em.raw() << wc.code.get_str() << ' ' << wc.block_length << ' ' << wc.alphabet.value() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- run
int cmd_run(Emitter& em, std::ostream& err, const RuleTable& rule, const std::string& seed_text,
            std::size_t steps, const std::string& format, const std::string& mode, std::size_t cap) {
  const Word seed = Word::parse(rule.alphabet(), seed_text);
  const Trajectory traj = run(rule, seed, {steps, parse_mode(mode), resolve_cap(cap)});

  if (em.porcelain()) {
    em.kv("steps", std::to_string(traj.steps()));
    em.kv("truncated", traj.truncated ? "yes" : "no");
  }
  if (format == "lengths") {
    if (em.porcelain()) {
      for (std::size_t t = 0; t < traj.lengths.size(); ++t) em.kv("length." + std::to_string(t), std::to_string(traj.lengths[t]));
    } else {
      for (std::size_t t = 0; t < traj.lengths.size(); ++t) em.raw() << (t ? " " : "") << traj.lengths[t];
      em.raw() << '\n';
    }
  } else {
    for (std::size_t t = 0; t < traj.words.size(); ++t) {
      const std::string ts = std::to_string(t);
      if (format == "words") {
        if (em.porcelain()) {
          em.kv("word." + ts, traj.words[t].to_string());
        } else {
          em.raw() << traj.words[t].to_string() << '\n';
        }
      } else {
        const Natural a = traj.numerals.empty() ? traj.words[t].numeral() : traj.numerals[t];
        if (em.porcelain()) {
          em.kv("numeral." + ts, a.get_str());
          em.kv("length." + ts, std::to_string(traj.lengths[t]));
        } else {
          em.raw() << a.get_str() << ' ' << traj.lengths[t] << '\n';
        }
      }
    }
  }
  if (traj.truncated) {
    report_truncation(traj, err);
    return kCapExceeded;
  }
  return kOk;
}

// ---------------------------------------------------------------- analyze
int cmd_analyze(Emitter& em, std::ostream& err, const RuleTable& rule, const std::string& seed_text,
                std::size_t steps, const std::string& mode, std::size_t cap,
                const AnalysisOptions& options) {
  const Word seed = Word::parse(rule.alphabet(), seed_text);
  const Trajectory traj = run(rule, seed, {steps, parse_mode(mode), resolve_cap(cap)});
  const AnalysisReport rep = analyze(traj, options);
  const auto p = rule.alphabet().value();
  const std::string kNotApplicable = "not applicable (preconditions)";

  auto q_source = [&] {
    switch (rep.q_source) {
      case QSource::Closed: return "closed form";
      case QSource::Empirical: return "empirical, final step";
      case QSource::Override: return "given";
      case QSource::None: return "none";
    }
    return "none";
  }();

  if (em.porcelain()) {
    em.kv("rule", describe_rule(rule));
    em.kv("steps", std::to_string(traj.steps()));
    em.kv("truncated", traj.truncated ? "yes" : "no");
    for (std::size_t t = 0; t < traj.words.size(); ++t) {
      const std::string ts = std::to_string(t);
      em.kv("W." + ts, std::to_string(rep.total_boxes[t]));
      em.kv("N1." + ts, std::to_string(rep.ones[t]));
      for (std::size_t s = 0; s < p; ++s) em.kv("count." + ts + "." + std::to_string(s), std::to_string(rep.counts[t][s]));
      em.kv("S_boltzmann." + ts, fmt_real(rep.boltzmann[t]));
      if (rep.q) em.kv("S_q." + ts, fmt_real(rep.tsallis[t]));
    }
    for (const auto& d : rep.dimension_empirical) {
      em.kv("D_empirical." + std::to_string(d.step), d.value ? fmt_real(*d.value) : "undefined");
    }
    em.kv("D_closed", rep.dimension_closed ? fmt_real(*rep.dimension_closed) : kNotApplicable);
    if (!rep.dimension_closed) em.kv("D_closed_reason", rep.closed_form_note);
    em.kv("q", rep.q ? fmt_real(*rep.q) : kNotApplicable);
    em.kv("q_source", q_source);
    em.kv("second_law", to_string(rep.second_law.verdict));
    em.kv("non_decreasing", rep.second_law.non_decreasing ? "yes" : "no");
    for (std::size_t t = 0; t < rep.second_law.step_exponents.size(); ++t) {
      em.kv("exponent." + std::to_string(t), std::to_string(rep.second_law.step_exponents[t]));
    }
    for (const auto& row : rep.radix_economy) em.kv("radix_economy." + std::to_string(row.eta.value()), row.economy.get_str());
    if (rep.optimal_radix) em.kv("optimal_radix", std::to_string(rep.optimal_radix->value()));
  } else {
    auto& o = em.raw();
    o << "rule: " << describe_rule(rule) << '\n';
    o << "steps: " << traj.steps() << (traj.truncated ? " (truncated at word-length cap)" : "") << '\n';
    o << "t\tW\tN1\tcounts\tD_empirical\tS_q\tln W\n";
    for (std::size_t t = 0; t < traj.words.size(); ++t) {
      o << t << '\t' << rep.total_boxes[t] << '\t' << rep.ones[t] << '\t';
      for (std::size_t s = 0; s < p; ++s) o << (s ? "," : "") << rep.counts[t][s];
      o << '\t';
      if (t == 0 || rep.dimension_empirical.empty()) {
        o << '-';
      } else {
        const auto& d = rep.dimension_empirical[t - 1];
        o << (d.value ? fmt_real(*d.value) : "undefined");
      }
      o << '\t' << (rep.q ? fmt_real(rep.tsallis[t]) : "-") << '\t' << fmt_real(rep.boltzmann[t]) << '\n';
    }
    o << "D_closed: "
      << (rep.dimension_closed ? fmt_real(*rep.dimension_closed) : kNotApplicable + " - " + rep.closed_form_note)
      << '\n';
    o << "q: " << (rep.q ? fmt_real(*rep.q) : kNotApplicable) << " (" << q_source << ", D* = 1)\n";
    o << "second law: " << to_string(rep.second_law.verdict)
      << ", lengths non-decreasing: " << (rep.second_law.non_decreasing ? "yes" : "no") << '\n';
    o << "length exponent per step:";
    for (std::size_t e : rep.second_law.step_exponents) o << ' ' << e;
    o << '\n';
    if (!rep.radix_economy.empty()) {
      o << "radix economy of final numeral:\n";
      for (const auto& row : rep.radix_economy) o << "  eta=" << row.eta.value() << '\t' << row.economy.get_str() << '\n';
      o << "optimal radix: " << rep.optimal_radix->value() << '\n';
    }
  }
  if (traj.truncated) {
    report_truncation(traj, err);
    return kCapExceeded;
  }
  return kOk;
}

// ---------------------------------------------------------------- render
int cmd_render(Emitter& em, std::ostream& err, const RuleTable& rule, const std::string& seed_text,
               std::size_t steps, std::size_t width, std::size_t row_height,
               const std::string& palette_name, const std::string& out_path, const std::string& format,
               unsigned jobs, std::size_t cap) {
  const Word seed = Word::parse(rule.alphabet(), seed_text);
  const Trajectory traj = run(rule, seed, {steps, RunMode::Strings, resolve_cap(cap)});
  const Palette palette = Palette::named(palette_name, rule.alphabet());

  std::string bytes;
  std::string dims;
  if (format == "svg") {
    bytes = svg_text(traj, palette);
    dims = std::to_string(traj.words.size()) + " rows";
  } else {
    const RasterImage img = render_spacetime(traj, palette, width, row_height, jobs);
    bytes = ppm_bytes(img);
    dims = std::to_string(img.width()) + "x" + std::to_string(img.height());
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size())) || !out.flush()) {
    throw CliError(kUsage, "cannot write '" + out_path + "'");
  }
  const std::string digest = sha256_hex(bytes);
  if (em.porcelain()) {
    em.kv("path", out_path);
    em.kv("format", format);
    em.kv("size", dims);
    em.kv("bytes", std::to_string(bytes.size()));
    em.kv("sha256", digest);
  } else {
    em.raw() << "wrote " << out_path << " (" << format << ", " << dims << ")\n"
             << "sha256 " << digest << '\n';
  }
  if (traj.truncated) {
    report_truncation(traj, err);
    return kCapExceeded;
  }
  return kOk;
}

// ---------------------------------------------------------------- check
int cmd_check(Emitter& em, const CheckOptions& options) {
  const CheckReport r = run_check(options);
  if (em.porcelain()) {
    em.kv("exhaustive_rules", std::to_string(r.exhaustive_rules));
    em.kv("exhaustive_cases", std::to_string(r.exhaustive_cases));
    em.kv("sampled_cases", std::to_string(r.sampled_cases));
    em.kv("steps_checked", std::to_string(r.steps_checked));
    em.kv("constant_steps_checked", std::to_string(r.constant_steps_checked));
    em.kv("codec_codes", std::to_string(r.codec_codes));
    em.kv("mismatches", std::to_string(r.mismatches));
    em.kv("second_law_violations", std::to_string(r.second_law_violations));
    em.kv("codec_failures", std::to_string(r.codec_failures));
    em.kv("result", r.passed() ? "PASS" : "FAIL");
  } else {
    auto& o = em.raw();
    o << "exhaustive: " << r.exhaustive_rules << " rules, " << r.exhaustive_cases << " cases\n"
      << "sampled: " << r.sampled_cases << " cases\n"
      << "steps checked: " << r.steps_checked << " (constant-length route: " << r.constant_steps_checked << ")\n"
      << "codec round trips: " << r.codec_codes << '\n';
    const std::size_t cases = r.exhaustive_cases + r.sampled_cases;
    if (r.passed()) {
      o << "PASS " << cases << " cases\n";
    } else {
      o << "FAIL mismatches=" << r.mismatches << " second-law=" << r.second_law_violations
        << " codec=" << r.codec_failures << '\n';
    }
  }
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    em.raw() << (em.porcelain() ? "# " : "") << "first counterexample (" << f.family << "): seed "
             << (f.seed.empty() ? "-" : f.seed) << ", step " << f.step << ": " << f.detail << '\n';
    std::istringstream rule_lines(f.rule);
    for (std::string line; std::getline(rule_lines, line);) em.raw() << "#   " << line << '\n';
  }
  return r.passed() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- bench
int cmd_bench(Emitter& em, std::ostream& err, const RuleTable& rule, const std::string& seed_text,
              std::size_t steps, std::size_t repetitions, const std::string& paths, std::size_t cap) {
  using Clock = std::chrono::steady_clock;
  const Word seed = Word::parse(rule.alphabet(), seed_text);
  const std::size_t limit = resolve_cap(cap);
  const bool want_array = paths != "number";
  bool want_number = paths != "array";
  std::string number_note;
  if (want_number && (!validate(rule).empty() || seed.leftmost() == 0)) {
    want_number = false;
    number_note = "rule or seed not admissible for the numeral map";
  }

  // Lengths come from the cheap length recurrence, independent of timing.
  std::vector<std::size_t> lengths{seed.length()};
  bool truncated = false;
  {
    std::vector<std::size_t> counts(rule.alphabet().value(), 0);
    for (Symbol s : seed.symbols()) ++counts[s];
    for (std::size_t t = 0; t < steps; ++t) {
      std::vector<std::size_t> next(counts.size(), 0);
      std::size_t len = 0;
      for (Symbol k = 0; k < counts.size(); ++k) {
        for (Symbol s : rule.block(k)) next[s] += counts[k];
        len += counts[k] * rule.length(k);
      }
      if (len > limit) {
        truncated = true;
        break;
      }
      counts = std::move(next);
      lengths.push_back(len);
    }
  }
  const std::size_t done = lengths.size() - 1;

  // samples[path][t-1][rep] in microseconds.
  auto time_path = [&](bool number) {
    std::vector<std::vector<double>> samples(done, std::vector<double>(repetitions));
    for (std::size_t r = 0; r < repetitions; ++r) {
      Word w = seed;
      NumberedWord nw{seed.numeral(), seed.length()};
      for (std::size_t t = 0; t < done; ++t) {
        const auto start = Clock::now();
        if (number) {
          nw = step_number(rule, nw.numeral, nw.length);
        } else {
          w = step_string(rule, w);
        }
        samples[t][r] = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
      }
    }
    return samples;
  };
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };

  auto& o = em.raw();
  if (!em.porcelain()) {
    o << "# rule " << describe_rule(rule) << ", steps " << done << ", repetitions " << repetitions << '\n';
    o << "path\tstep\tlength";
    for (std::size_t r = 1; r <= repetitions; ++r) o << "\tsample_" << r << "_us";
    o << "\tmedian_us\n";
  } else {
    em.kv("steps", std::to_string(done));
    em.kv("repetitions", std::to_string(repetitions));
  }
  auto emit = [&](const std::string& name, const std::vector<std::vector<double>>& samples) {
    for (std::size_t t = 0; t < samples.size(); ++t) {
      const std::string key = name + "." + std::to_string(t + 1);
      if (em.porcelain()) {
        em.kv(key + ".length", std::to_string(lengths[t + 1]));
        for (std::size_t r = 0; r < repetitions; ++r) em.kv(key + ".sample." + std::to_string(r + 1), fmt_real(samples[t][r]));
        em.kv(key + ".median_us", fmt_real(median(samples[t])));
      } else {
        o << name << '\t' << t + 1 << '\t' << lengths[t + 1];
        for (double s : samples[t]) o << '\t' << fmt_real(s);
        o << '\t' << fmt_real(median(samples[t])) << '\n';
      }
    }
  };
  if (want_array) emit("array", time_path(false));
  if (want_number) emit("number", time_path(true));
  if (!number_note.empty() && paths != "array") {
    em.kv("number_path", "skipped: " + number_note);
  }
  em.kv("peak_length", std::to_string(lengths.back()));
  em.kv("truncated", truncated ? "yes" : "no");
  if (truncated) {
    err << "word-length cap reached: benchmarked " << done << " of " << steps << " steps\n";
    return kCapExceeded;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic substitution systems: rule codes, trajectories, analysis, rendering"};
  app.name("subst");
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "emit key<TAB>value lines only");

  // decode
  auto* decode = app.add_subcommand("decode", "print the rule table named by a Wolfram code");
  std::string d_code;
  std::size_t d_n = 0;
  unsigned long d_p = 0;
  decode->add_option("--code", d_code, "code")->required();
  decode->add_option("--blocklen", d_n, "block length N")->required()->check(CLI::PositiveNumber);
  decode->add_option("--alphabet", d_p, "alphabet size p")->required()->check(CLI::Range(2ul, 1ul << 20));

  // encode
  auto* encode = app.add_subcommand("encode", "print 'code N p' for a constant-length rule");
  RuleSource e_rule;
  e_rule.attach(encode, true);

  // shared trajectory options
  struct TrajectoryFlags {
    RuleSource rule;
    std::string seed = "1";
    std::size_t steps = 5;
    std::string mode = "string";
    std::size_t cap = 0;
    void attach(CLI::App* cmd, std::size_t default_steps) {
      steps = default_steps;
      rule.attach(cmd);
      cmd->add_option("--seed", seed, "seed word, e.g. 1 or 0110 or '10 3 7'")->capture_default_str();
      cmd->add_option("--steps", steps, "number of substitution steps")->capture_default_str();
      cmd->add_option("--max-length", cap, "word-length cap (default: SUBST_MAX_WORD_LENGTH or 1e8)");
    }
  };

  auto* run_cmd = app.add_subcommand("run", "iterate a rule and print the trajectory");
  TrajectoryFlags r_flags;
  r_flags.attach(run_cmd, 5);
  std::string r_format = "words";
  run_cmd->add_option("--format", r_format, "words | numbers | lengths")
      ->check(CLI::IsMember({"words", "numbers", "lengths"}))->capture_default_str();
  run_cmd->add_option("--mode", r_flags.mode, "string | number | both")
      ->check(CLI::IsMember({"string", "number", "both"}))->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "dimension, entropies and second-law verdict");
  TrajectoryFlags a_flags;
  a_flags.attach(analyze_cmd, 6);
  AnalysisOptions a_opts;
  double a_q = 0;
  analyze_cmd->add_option("--mode", a_flags.mode, "string | number | both")
      ->check(CLI::IsMember({"string", "number", "both"}))->capture_default_str();
  analyze_cmd->add_flag("--radix-table", a_opts.radix_table, "radix economy of the final numeral");
  analyze_cmd->add_option("--eta-max", a_opts.eta_max, "largest radix in the table")
      ->check(CLI::Range(2ul, 4096ul))->capture_default_str();
  auto* q_opt = analyze_cmd->add_option("--q", a_q, "entropic parameter override")->check(CLI::Range(0.0, 1.0));

  auto* render_cmd = app.add_subcommand("render", "draw the space-time diagram (PPM or SVG)");
  TrajectoryFlags v_flags;
  v_flags.attach(render_cmd, 5);
  std::size_t v_width = 729;
  std::size_t v_row = 8;
  std::string v_palette = "default";
  std::string v_out;
  std::string v_format = "ppm";
  unsigned v_jobs = std::max(1u, std::thread::hardware_concurrency());
  render_cmd->add_option("--width", v_width, "image width in pixels")->check(CLI::PositiveNumber)->capture_default_str();
  render_cmd->add_option("--row-height", v_row, "pixel rows per step")->check(CLI::PositiveNumber)->capture_default_str();
  render_cmd->add_option("--palette", v_palette, "default | paper-fig2")->capture_default_str();
  render_cmd->add_option("--out", v_out, "output path")->required();
  render_cmd->add_option("--format", v_format, "ppm | svg")->check(CLI::IsMember({"ppm", "svg"}))->capture_default_str();
  render_cmd->add_option("--jobs", v_jobs, "rasterization threads")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "numeral vs symbol route equivalence suite");
  CheckOptions c_opts;
  c_opts.workers = std::max(1u, std::thread::hardware_concurrency());
  bool c_no_exhaustive = false;
  bool c_no_codec = false;
  std::string c_fault = "none";
  check_cmd->add_option("--max-p", c_opts.sample_max_p, "largest alphabet of sampled rules")->check(CLI::Range(2ul, 64ul))->capture_default_str();
  check_cmd->add_option("--max-len", c_opts.sample_max_len, "longest block of sampled rules")->check(CLI::PositiveNumber)->capture_default_str();
  check_cmd->add_option("--max-steps", c_opts.sample_steps, "steps per sampled case")->capture_default_str();
  check_cmd->add_option("--samples", c_opts.samples, "number of sampled rules")->capture_default_str();
  check_cmd->add_option("--rng-seed", c_opts.rng_seed, "seed for rule sampling")->capture_default_str();
  check_cmd->add_option("--exhaustive-max-p", c_opts.exhaustive_max_p, "")->check(CLI::Range(2ul, 4ul))->capture_default_str();
  check_cmd->add_option("--exhaustive-max-len", c_opts.exhaustive_max_len, "")->check(CLI::Range(1ul, 4ul))->capture_default_str();
  check_cmd->add_option("--exhaustive-seed-len", c_opts.exhaustive_seed_len, "")->check(CLI::Range(1ul, 6ul))->capture_default_str();
  check_cmd->add_option("--exhaustive-steps", c_opts.exhaustive_steps, "")->capture_default_str();
  check_cmd->add_flag("--no-exhaustive", c_no_exhaustive, "skip the exhaustive family");
  check_cmd->add_flag("--no-codec", c_no_codec, "skip Wolfram-code round trips");
  check_cmd->add_option("--jobs", c_opts.workers, "worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_option("--inject-fault", c_fault, "harness self-test: none | orientation")
      ->check(CLI::IsMember({"none", "orientation"}));

  auto* bench_cmd = app.add_subcommand("bench", "time the symbol-array and numeral routes per step");
  TrajectoryFlags b_flags;
  b_flags.attach(bench_cmd, 10);
  std::size_t b_reps = 3;
  std::string b_paths = "both";
  bench_cmd->add_option("--repetitions", b_reps, "timed repetitions")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--paths", b_paths, "array | number | both")->check(CLI::IsMember({"array", "number", "both"}))->capture_default_str();

  std::vector<const char*> argv{"subst"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Emitter em(out, porcelain);
  try {
    if (*decode) return cmd_decode(em, d_code, d_n, d_p);
    if (*encode) return cmd_encode(em, e_rule.load());
    if (*run_cmd) {
      return cmd_run(em, err, r_flags.rule.load(), r_flags.seed, r_flags.steps, r_format, r_flags.mode, r_flags.cap);
    }
    if (*analyze_cmd) {
      if (q_opt->count()) a_opts.q_override = a_q;
      return cmd_analyze(em, err, a_flags.rule.load(), a_flags.seed, a_flags.steps, a_flags.mode, a_flags.cap, a_opts);
    }
    if (*render_cmd) {
      return cmd_render(em, err, v_flags.rule.load(), v_flags.seed, v_flags.steps, v_width, v_row, v_palette,
                        v_out, v_format, v_jobs, v_flags.cap);
    }
    if (*check_cmd) {
      c_opts.exhaustive = !c_no_exhaustive;
      c_opts.codec = !c_no_codec;
      c_opts.fault = c_fault == "orientation" ? Fault::Orientation : Fault::None;
      return cmd_check(em, c_opts);
    }
    if (*bench_cmd) {
      return cmd_bench(em, err, b_flags.rule.load(), b_flags.seed, b_flags.steps, b_reps, b_paths, b_flags.cap);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const RepresentationMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ParseError& e) {
    err << "error: rule file " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace subst::cli
