#pragma once
// Command line front end: single bound evaluation, the built-in regression
// table, parameter sweeps and Monte-Carlo verification.  The entry point
// takes explicit argument/stream parameters so the whole surface is
// testable in-process.
//
// Exit codes: 0 success (significant bound / all rows pass / verification
// pass), 1 usage or input error, 2 computed-but-not-significant or a
// failed regression/verification.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcb/bounds.hpp"
#include "vcb/montecarlo.hpp"
#include "vcb/optimizer.hpp"
#include "vcb/output.hpp"

namespace vcb::cli {

namespace detail {

struct BoundFlags {
  std::string theorem;
  std::int64_t n = 0;
  std::string k = "1";
  std::int64_t h = 0;
  double log_class_size = 0.0;
  double d_explicit = 0.0;
  double epsilon = 0.0;
  double r1 = 0.0;
  std::string alpha = "auto";
  std::string level = "auto";
  double zeta = 2.0;
  std::string dbar = "dstar";
  bool weakened = false;
  std::string format = "text";
  std::int64_t k_max = 200;

  CLI::Option* h_opt = nullptr;
  CLI::Option* lcs_opt = nullptr;
  CLI::Option* d_opt = nullptr;
};

inline void add_bound_flags(CLI::App* cmd, BoundFlags& f) {
  cmd->set_help_flag("--help", "print this help");  // frees -h/--h for the VC flag
  cmd->add_option("--theorem", f.theorem, "bound tag")->required();
  cmd->add_option("--N", f.n, "labeled sample size")->required();
  cmd->add_option("--k", f.k, "shadow multiplier, or 'auto' to scan");
  f.h_opt = cmd->add_option("--h", f.h, "VC dimension");
  f.lcs_opt = cmd->add_option("--log-class-size", f.log_class_size,
                              "natural log of the class cardinality");
  f.d_opt = cmd->add_option("--d", f.d_explicit,
                            "explicit complexity exponent (confidence folded in)");
  cmd->add_option("--epsilon", f.epsilon, "confidence parameter in (0,1)")
      ->required();
  cmd->add_option("--r1", f.r1, "empirical training error in [0,1]")->required();
  cmd->add_option("--alpha", f.alpha, "integration trade-off, or 'auto'");
  cmd->add_option("--j", f.level, "chaining level, or 'auto'");
  cmd->add_option("--zeta", f.zeta, "scale of the comparison bound (> 1)");
  cmd->add_option("--dbar", f.dbar, "prior-mean exponent, or 'dstar'");
  cmd->add_flag("--weakened", f.weakened,
                "simplified form of the exchangeable k=1 bound");
  cmd->add_option("--k-max", f.k_max, "upper end of the --k auto scan");
  cmd->add_option("--format", f.format, "text | json | csv");
}

struct ParsedBound {
  Theorem theorem{};
  BoundInput input;
  BoundOptions opts;
  bool k_auto = false;
  std::int64_t k_max = 200;
  std::string format = "text";
};

// Returns nothing after printing a one-line diagnostic naming the flag.
inline std::optional<ParsedBound> interpret(const BoundFlags& f,
                                            std::ostream& err) {
  ParsedBound p;
  const std::optional<Theorem> t = parse_theorem(f.theorem);
  if (!t) {
    err << "error: --theorem: unknown tag '" << f.theorem << "'\n";
    return std::nullopt;
  }
  p.theorem = *t;
  if (f.n < 1) {
    err << "error: --N must be >= 1\n";
    return std::nullopt;
  }
  if (!(f.epsilon > 0.0 && f.epsilon < 1.0)) {
    err << "error: --epsilon must lie in (0,1)\n";
    return std::nullopt;
  }
  if (!(f.r1 >= 0.0 && f.r1 <= 1.0)) {
    err << "error: --r1 must lie in [0,1]\n";
    return std::nullopt;
  }
  const int complexity_flags = (f.h_opt->count() > 0 ? 1 : 0) +
                               (f.lcs_opt->count() > 0 ? 1 : 0) +
                               (f.d_opt->count() > 0 ? 1 : 0);
  if (complexity_flags != 1) {
    err << "error: provide exactly one of --h, --log-class-size, --d\n";
    return std::nullopt;
  }
  try {
    if (f.h_opt->count() > 0)
      p.input.complexity = ComplexitySpec::vc_dim(f.h);
    else if (f.lcs_opt->count() > 0)
      p.input.complexity = ComplexitySpec::log_class_size(f.log_class_size);
    else
      p.input.complexity = ComplexitySpec::explicit_d(f.d_explicit);
  } catch (const std::exception& e) {
    err << "error: "
        << (f.h_opt->count() ? "--h" : f.lcs_opt->count() ? "--log-class-size" : "--d")
        << ": " << e.what() << "\n";
    return std::nullopt;
  }
  p.input.n = f.n;
  p.input.epsilon = f.epsilon;
  p.input.r1 = f.r1;

  if (f.k == "auto") {
    p.k_auto = true;
    p.input.k = 1;
    if (f.k_max < 1) {
      err << "error: --k-max must be >= 1\n";
      return std::nullopt;
    }
    p.k_max = f.k_max;
  } else {
    try {
      p.input.k = std::stoll(f.k);
    } catch (...) {
      err << "error: --k must be an integer or 'auto'\n";
      return std::nullopt;
    }
    if (p.input.k < 1) {
      err << "error: --k must be >= 1\n";
      return std::nullopt;
    }
  }
  if (f.alpha != "auto") {
    try {
      p.opts.alpha = std::stod(f.alpha);
    } catch (...) {
      err << "error: --alpha must be a positive real or 'auto'\n";
      return std::nullopt;
    }
    if (!(*p.opts.alpha > 0.0)) {
      err << "error: --alpha must be > 0\n";
      return std::nullopt;
    }
  }
  if (f.level != "auto") {
    try {
      p.opts.level = std::stoi(f.level);
    } catch (...) {
      err << "error: --j must be an integer or 'auto'\n";
      return std::nullopt;
    }
    if (*p.opts.level < 1) {
      err << "error: --j must be >= 1\n";
      return std::nullopt;
    }
  }
  if (f.dbar != "dstar") {
    try {
      p.opts.dbar = std::stod(f.dbar);
    } catch (...) {
      err << "error: --dbar must be a positive real or 'dstar'\n";
      return std::nullopt;
    }
    if (!(*p.opts.dbar > 0.0)) {
      err << "error: --dbar must be > 0\n";
      return std::nullopt;
    }
  }
  if (p.theorem == Theorem::PreviousPac && !(f.zeta > 1.0)) {
    err << "error: --zeta must be > 1\n";
    return std::nullopt;
  }
  p.opts.zeta = f.zeta;
  p.opts.weakened = f.weakened;
  if (f.format != "text" && f.format != "json" && f.format != "csv") {
    err << "error: --format must be text, json or csv\n";
    return std::nullopt;
  }
  p.format = f.format;
  return p;
}

inline void add_input_fields(OutputRecord& rec, const ParsedBound& p) {
  rec.add("theorem", theorem_name(p.theorem));
  rec.add("N", p.input.n);
  rec.add("k", p.input.k);
  switch (p.input.complexity.kind) {
    case ComplexitySpec::Kind::VcDim:
      rec.add("h", p.input.complexity.vc);
      break;
    case ComplexitySpec::Kind::LogClassSize:
      rec.add("log_class_size", p.input.complexity.amount);
      break;
    case ComplexitySpec::Kind::ExplicitD:
      rec.add("d_explicit", p.input.complexity.amount);
      break;
  }
  rec.add("epsilon", p.input.epsilon);
  rec.add("r1", p.input.r1);
  if (p.theorem == Theorem::PreviousPac) rec.add("zeta_in", p.opts.zeta);
  if (p.theorem == Theorem::InductiveExchangeableK1)
    rec.add("weakened", p.opts.weakened);
}

inline void add_result_fields(OutputRecord& rec, const BoundResult& res) {
  rec.add("value", res.value);
  rec.add("significant", res.significant);
  rec.add("valid", res.valid);
  rec.add("confidence", res.confidence);
  rec.add("r1_on_grid", res.r1_on_grid);
  for (const auto& [key, value] : res.terms) rec.add(key, value);
}

inline void print_record(const OutputRecord& rec, const std::string& format,
                         std::ostream& out) {
  if (format == "json")
    out << rec.to_json().dump(2) << "\n";
  else if (format == "csv")
    out << rec.csv_header() << "\n" << rec.csv_row() << "\n";
  else
    out << rec.text_block();
}

// ---------------------------------------------------------------- bound --

inline int cmd_bound(const BoundFlags& flags, std::ostream& out,
                     std::ostream& err) {
  const std::optional<ParsedBound> parsed = interpret(flags, err);
  if (!parsed) return 1;
  ParsedBound p = *parsed;

  std::optional<Optimum> scan;
  if (p.k_auto) {
    try {
      scan = optimize_k(p.theorem, p.input, p.k_max, p.opts);
    } catch (const std::exception& e) {
      err << "error: --k auto: " << e.what() << "\n";
      return 1;
    }
    p.input.k = std::int64_t(scan->argmin);
  }

  BoundResult res;
  try {
    res = evaluate_bound(p.theorem, p.input, p.opts);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  OutputRecord rec;
  add_input_fields(rec, p);
  add_result_fields(rec, res);
  if (scan) {
    rec.add("k_plateau_min", std::int64_t(scan->plateau.front()));
    rec.add("k_plateau_max", std::int64_t(scan->plateau.back()));
    rec.add("k_plateau_size", std::int64_t(scan->plateau.size()));
  }
  print_record(rec, p.format, out);
  return res.significant ? 0 : 2;
}

// ------------------------------------------------------------ reproduce --

struct ReproRow {
  std::string label;
  Theorem theorem{};
  BoundInput input;
  BoundOptions opts;
  enum class Check { Near, Above, Window } check = Check::Near;
  double expected = 0.0;  // Near / Above reference
  double lo = 0.0, hi = 0.0;  // Window
  double tol_scale = 1.0;
  bool must_be_insignificant = false;
};

inline std::vector<ReproRow> reproduction_rows() {
  const ComplexitySpec vc10 = ComplexitySpec::vc_dim(10);
  const BoundInput base{1000, 1, 0.01, 0.2, vc10};
  const BoundInput large{1000000, 1, 0.005, 0.2, vc10};
  auto with_k = [](BoundInput in, std::int64_t k) {
    in.k = k;
    return in;
  };
  std::vector<ReproRow> rows;
  rows.push_back({"shadow bound, k=4", Theorem::TransductiveBasic,
                  with_k(base, 4), {}, ReproRow::Check::Near, 0.4872});
  rows.push_back({"shadow bound, k=1", Theorem::TransductiveBasic,
                  with_k(base, 1), {}, ReproRow::Check::Near, 0.5098});
  rows.push_back({"pair variance, k=1", Theorem::TransductiveImprovedK1,
                  with_k(base, 1), {}, ReproRow::Check::Near, 0.453});
  rows.push_back({"capped variance, k=16", Theorem::TransductiveImproved,
                  with_k(base, 16), {}, ReproRow::Check::Near, 0.4203});
  rows.push_back({"integrated risk, k=19", Theorem::InductiveIntegrated,
                  with_k(base, 19), {}, ReproRow::Check::Near, 0.4257});
  rows.push_back({"integrated tight, k=19", Theorem::InductiveIntegratedTight,
                  with_k(base, 19), {}, ReproRow::Check::Near, 0.4248});
  ReproRow basic{"basic variance, k=9", Theorem::InductiveBasicVariance,
                 with_k(base, 9), {}, ReproRow::Check::Near, 0.516};
  basic.must_be_insignificant = true;
  rows.push_back(basic);
  rows.push_back({"exchangeable risk, k=1", Theorem::InductiveExchangeableK1,
                  with_k(base, 1), {}, ReproRow::Check::Near, 0.460});
  rows.push_back({"near-optimal scale, k=18", Theorem::InductiveNearOptimalLambda,
                  with_k(base, 18), {}, ReproRow::Check::Near, 0.4213});
  rows.push_back({"exchangeable scale, k=1", Theorem::InductiveExchangeableLambda,
                  with_k(base, 1), {}, ReproRow::Check::Near, 0.445});
  ReproRow vap{"two-sample baseline", Theorem::Vapnik, base, {},
               ReproRow::Check::Above, 0.610};
  rows.push_back(vap);
  ReproRow window{"capped variance, N=1e6, k=30", Theorem::TransductiveImproved,
                  with_k(large, 30), {}, ReproRow::Check::Window};
  window.lo = 0.2074;
  window.hi = 0.2077;
  rows.push_back(window);
  ReproRow chained{"chained relative, N=1e6, (k,j)=(257,7)",
                   Theorem::RelativeChained, with_k(large, 257), {},
                   ReproRow::Check::Window};
  chained.opts.level = 7;
  chained.lo = 0.20;
  chained.hi = 0.20672;
  rows.push_back(chained);
  return rows;
}

inline int cmd_reproduce(const std::string& format, double tolerance,
                         std::ostream& out, std::ostream& err) {
  if (!(tolerance > 0.0)) {
    err << "error: --tolerance must be > 0\n";
    return 1;
  }
  const std::vector<ReproRow> rows = reproduction_rows();
  std::vector<OutputRecord> records;
  bool all_pass = true;
  int index = 0;
  for (const ReproRow& row : rows) {
    ++index;
    const BoundResult res = evaluate_bound(row.theorem, row.input, row.opts);
    bool pass = false;
    std::string criterion;
    char buf[128];
    switch (row.check) {
      case ReproRow::Check::Near: {
        const double tol = tolerance * row.tol_scale;
        pass = std::fabs(res.value - row.expected) <= tol;
        std::snprintf(buf, sizeof(buf), "|value - %.4f| <= %g", row.expected,
                      tol);
        criterion = buf;
        break;
      }
      case ReproRow::Check::Above:
        pass = res.value > row.expected;
        std::snprintf(buf, sizeof(buf), "value > %.3f", row.expected);
        criterion = buf;
        break;
      case ReproRow::Check::Window:
        pass = res.value > row.lo && res.value < row.hi;
        std::snprintf(buf, sizeof(buf), "value in (%.4f, %.5f)", row.lo,
                      row.hi);
        criterion = buf;
        break;
    }
    if (row.must_be_insignificant) pass = pass && !res.significant;
    all_pass = all_pass && pass;

    OutputRecord rec;
    rec.add("row", index);
    rec.add("label", row.label);
    rec.add("theorem", theorem_name(row.theorem));
    rec.add("N", row.input.n);
    rec.add("k", row.input.k);
    rec.add("epsilon", row.input.epsilon);
    rec.add("r1", row.input.r1);
    rec.add("criterion", criterion);
    rec.add("computed", res.value);
    rec.add("significant", res.significant);
    rec.add("pass", pass);
    records.push_back(std::move(rec));
  }

  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OutputRecord& rec : records) arr.push_back(rec.to_json());
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    out << records.front().csv_header() << "\n";
    for (const OutputRecord& rec : records) out << rec.csv_row() << "\n";
  } else {
    for (const OutputRecord& rec : records) {
      std::string row_no, label, criterion, computed, pass_text;
      for (const auto& [key, value] : rec.fields()) {
        if (key == "row") row_no = OutputRecord::value_string(value);
        if (key == "label") label = std::get<std::string>(value);
        if (key == "criterion") criterion = std::get<std::string>(value);
        if (key == "computed") {
          char b[32];
          std::snprintf(b, sizeof(b), "%.5f", std::get<double>(value));
          computed = b;
        }
        if (key == "pass") pass_text = std::get<bool>(value) ? "pass" : "FAIL";
      }
      char line[256];
      std::snprintf(line, sizeof(line), "%2s  %-40s computed=%s  %-28s %s\n",
                    row_no.c_str(), label.c_str(), computed.c_str(),
                    criterion.c_str(), pass_text.c_str());
      out << line;
    }
    out << (all_pass ? "all rows pass\n" : "some rows FAILED\n");
  }
  return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------- sweep --

inline int cmd_sweep(const BoundFlags& flags, const std::string& vary,
                     double from, double to, double step, std::ostream& out,
                     std::ostream& err) {
  const std::optional<ParsedBound> parsed = interpret(flags, err);
  if (!parsed) return 1;
  const ParsedBound& p = *parsed;

  SweepSpec::Parameter param;
  if (vary == "k")
    param = SweepSpec::Parameter::K;
  else if (vary == "alpha")
    param = SweepSpec::Parameter::Alpha;
  else if (vary == "j")
    param = SweepSpec::Parameter::J;
  else if (vary == "r1")
    param = SweepSpec::Parameter::R1;
  else {
    err << "error: --vary must be k, alpha, j or r1\n";
    return 1;
  }
  if (!(step > 0.0) || to < from) {
    err << "error: --from/--to/--step describe an empty range\n";
    return 1;
  }
  const bool integral = param == SweepSpec::Parameter::K ||
                        param == SweepSpec::Parameter::J;
  if (integral && (from != std::floor(from) || step != std::floor(step))) {
    err << "error: --vary " << vary << " needs integer --from/--step\n";
    return 1;
  }
  const std::int64_t count = std::int64_t((to - from) / step + 1e-9) + 1;

  std::vector<OutputRecord> records;
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = from + double(i) * step;
    ParsedBound point = p;
    switch (param) {
      case SweepSpec::Parameter::K: point.input.k = std::int64_t(v); break;
      case SweepSpec::Parameter::Alpha: point.opts.alpha = v; break;
      case SweepSpec::Parameter::J: point.opts.level = int(v); break;
      case SweepSpec::Parameter::R1: point.input.r1 = v; break;
    }
    try {
      const BoundResult res = evaluate_bound(point.theorem, point.input,
                                             point.opts);
      OutputRecord rec;
      add_input_fields(rec, point);
      add_result_fields(rec, res);
      records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      err << "note: skipping " << vary << "=" << v << ": " << e.what() << "\n";
    }
  }
  if (records.empty()) {
    err << "error: no sweep point evaluated\n";
    return 1;
  }
  if (p.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OutputRecord& rec : records) arr.push_back(rec.to_json());
    out << arr.dump(2) << "\n";
  } else {
    out << records.front().csv_header() << "\n";
    for (const OutputRecord& rec : records) out << rec.csv_row() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify --

inline int cmd_verify(const std::string& theorem, std::int64_t n,
                      std::int64_t k, double epsilon, std::int64_t trials,
                      std::uint64_t seed, const std::string& cls_name,
                      double noise, int grid, int threads, bool force,
                      std::ostream& out, std::ostream& err) {
  const std::optional<Theorem> t = parse_theorem(theorem);
  if (!t) {
    err << "error: --theorem: unknown tag '" << theorem << "'\n";
    return 1;
  }
  if (n < 1 || k < 1 || trials < 1) {
    err << "error: --N, --k and --trials must be >= 1\n";
    return 1;
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    err << "error: --epsilon must lie in (0,1)\n";
    return 1;
  }
  if (!(noise >= 0.0 && noise < 0.5)) {
    err << "error: --noise must lie in [0, 0.5)\n";
    return 1;
  }
  if (grid < 1) {
    err << "error: --grid must be >= 1\n";
    return 1;
  }
  const double load = double(n) * double(k + 1) * double(trials);
  if (load > 1e9 && !force) {
    err << "error: N*(k+1)*trials = " << load
        << " exceeds 1e9; pass --force to run anyway\n";
    return 1;
  }

  HypothesisClass cls = HypothesisClass::thresholds_uniform(grid);
  if (cls_name == "intervals")
    cls = HypothesisClass::intervals_uniform(grid);
  else if (cls_name != "thresholds") {
    err << "error: --class must be thresholds or intervals\n";
    return 1;
  }

  VerificationReport rep;
  try {
    rep = verify(*t, DataModel::uniform01(noise), cls, n, k, epsilon, trials,
                 seed, threads);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  OutputRecord rec;
  rec.add("theorem", rep.theorem);
  rec.add("class", rep.hypothesis_class);
  rec.add("N", rep.n);
  rec.add("k", rep.k);
  rec.add("epsilon", rep.epsilon);
  rec.add("noise", rep.noise);
  rec.add("grid", grid);
  rec.add("class_size", rep.class_size);
  rec.add("trials", rep.trials);
  rec.add("seed", std::int64_t(rep.seed));
  rec.add("violations", rep.violations);
  rec.add("violation_rate", rep.violation_rate);
  rec.add("upper_confidence_99", rep.upper_confidence_99);
  rec.add("target", rep.target);
  rec.add("pass", rep.pass);
  out << rec.to_json().dump(2) << "\n";
  return rep.pass ? 0 : 2;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"generalization bound calculator, optimizer and verifier"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  detail::BoundFlags bound_flags;
  CLI::App* bound = app.add_subcommand("bound", "evaluate one bound");
  detail::add_bound_flags(bound, bound_flags);

  std::string repro_format = "text";
  double repro_tolerance = 1e-3;
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "run the built-in regression table");
  reproduce->add_option("--format", repro_format, "text | json | csv");
  reproduce->add_option("--tolerance", repro_tolerance,
                        "absolute tolerance for the value rows");

  detail::BoundFlags sweep_flags;
  std::string vary;
  double sweep_from = 0.0, sweep_to = 0.0, sweep_step = 1.0;
  CLI::App* sweep =
      app.add_subcommand("sweep", "evaluate a bound over a parameter grid");
  detail::add_bound_flags(sweep, sweep_flags);
  sweep->add_option("--vary", vary, "k | alpha | j | r1")->required();
  sweep->add_option("--from", sweep_from, "first grid value")->required();
  sweep->add_option("--to", sweep_to, "last grid value")->required();
  sweep->add_option("--step", sweep_step, "grid step (default 1)");

  std::string verify_theorem, verify_class = "thresholds";
  std::int64_t verify_n = 0, verify_k = 1, verify_trials = 1000;
  double verify_epsilon = 0.0, verify_noise = 0.2;
  std::uint64_t verify_seed = 1;
  int verify_grid = 200, verify_threads = 1;
  bool verify_force = false;
  CLI::App* verify =
      app.add_subcommand("verify", "Monte-Carlo check of a guarantee");
  verify->add_option("--theorem", verify_theorem, "bound tag")->required();
  verify->add_option("--N", verify_n, "labeled sample size")->required();
  verify->add_option("--k", verify_k, "shadow multiplier");
  verify->add_option("--epsilon", verify_epsilon, "confidence parameter")
      ->required();
  verify->add_option("--trials", verify_trials, "number of simulated samples");
  verify->add_option("--seed", verify_seed, "global seed");
  verify->add_option("--class", verify_class, "thresholds | intervals");
  verify->add_option("--noise", verify_noise, "label flip rate in [0, 0.5)");
  verify->add_option("--grid", verify_grid, "classifier grid resolution");
  verify->add_option("--threads", verify_threads, "worker threads");
  verify->add_flag("--force", verify_force, "ignore the desk-scale guard");

  std::vector<const char*> argv;
  argv.push_back("vcbounds");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (bound->parsed()) return detail::cmd_bound(bound_flags, out, err);
  if (reproduce->parsed()) {
    if (repro_format != "text" && repro_format != "json" &&
        repro_format != "csv") {
      err << "error: --format must be text, json or csv\n";
      return 1;
    }
    return detail::cmd_reproduce(repro_format, repro_tolerance, out, err);
  }
  if (sweep->parsed())
    return detail::cmd_sweep(sweep_flags, vary, sweep_from, sweep_to,
                             sweep_step, out, err);
  if (verify->parsed())
    return detail::cmd_verify(verify_theorem, verify_n, verify_k,
                              verify_epsilon, verify_trials, verify_seed,
                              verify_class, verify_noise, verify_grid,
                              verify_threads, verify_force, out, err);
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace vcb::cli
