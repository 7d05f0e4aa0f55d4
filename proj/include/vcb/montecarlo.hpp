#pragma once
// Empirical verification of the probabilistic guarantees on small,
// fully enumerable hypothesis classes.  A trial draws a (k+1)N design from
// a partially exchangeable product model, enumerates the effective class
// (distinct restriction patterns on the realized design), and checks the
// supremum form of each guarantee: a trial counts as a violation when ANY
// pattern exceeds its bound.  Bounds use the exact finite-class exponent
// ln|effective class| + ln(1/eps), not the Sauer cap, so a failure points
// at an implementation bug rather than slack.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "vcb/bounds.hpp"
#include "vcb/complexity.hpp"
#include "vcb/rng.hpp"

namespace vcb {

// Finite, enumerable classifier set over inputs in [0,1].
struct HypothesisClass {
  enum class Kind { Thresholds1D, Intervals1D, ExplicitFinite };

  Kind kind = Kind::Thresholds1D;
  std::vector<double> grid;  // thresholds, or interval endpoints
  std::vector<std::vector<std::uint8_t>> label_rows;  // ExplicitFinite only

  static HypothesisClass thresholds(std::vector<double> grid) {
    if (grid.empty())
      throw std::invalid_argument("hypothesis class: empty threshold grid");
    std::sort(grid.begin(), grid.end());
    return {Kind::Thresholds1D, std::move(grid), {}};
  }
  // `count` equispaced thresholds in the open unit interval.
  static HypothesisClass thresholds_uniform(int count) {
    std::vector<double> g;
    g.reserve(std::size_t(count));
    for (int i = 1; i <= count; ++i) g.push_back(double(i) / double(count + 1));
    return thresholds(std::move(g));
  }
  static HypothesisClass intervals(std::vector<double> endpoints) {
    if (endpoints.empty())
      throw std::invalid_argument("hypothesis class: empty endpoint grid");
    std::sort(endpoints.begin(), endpoints.end());
    return {Kind::Intervals1D, std::move(endpoints), {}};
  }
  static HypothesisClass intervals_uniform(int count) {
    std::vector<double> g;
    g.reserve(std::size_t(count));
    for (int i = 1; i <= count; ++i) g.push_back(double(i) / double(count + 1));
    return intervals(std::move(g));
  }
  static HypothesisClass explicit_finite(
      std::vector<std::vector<std::uint8_t>> rows) {
    if (rows.empty())
      throw std::invalid_argument("hypothesis class: empty label matrix");
    return {Kind::ExplicitFinite, {}, std::move(rows)};
  }

  std::int64_t size() const {
    switch (kind) {
      case Kind::Thresholds1D: return std::int64_t(grid.size());
      case Kind::Intervals1D: {
        const std::int64_t g = std::int64_t(grid.size());
        return g * (g + 1) / 2;
      }
      case Kind::ExplicitFinite: return std::int64_t(label_rows.size());
    }
    return 0;
  }

  // -1 when not a parametric family with a known VC dimension.
  int vc_dim() const {
    switch (kind) {
      case Kind::Thresholds1D: return 1;
      case Kind::Intervals1D: return 2;
      case Kind::ExplicitFinite: return -1;
    }
    return -1;
  }

  const char* name() const {
    switch (kind) {
      case Kind::Thresholds1D: return "thresholds";
      case Kind::Intervals1D: return "intervals";
      case Kind::ExplicitFinite: return "explicit";
    }
    return "unknown";
  }
};

// Sampling model: inputs drawn per index from U[a_i, b_i] (rotating over
// `ranges`), identically across the k+1 sample copies, so the joint law is
// partially exchangeable by construction.  Labels come from a target
// threshold classifier with symmetric flip noise.
struct DataModel {
  std::vector<std::pair<double, double>> ranges = {{0.0, 1.0}};
  double target_threshold = 0.5;
  double noise = 0.0;

  static DataModel uniform01(double noise, double target = 0.5) {
    if (!(noise >= 0.0 && noise < 0.5))
      throw std::invalid_argument("data model: noise must lie in [0, 0.5)");
    DataModel m;
    m.noise = noise;
    m.target_threshold = target;
    return m;
  }

  // Index-dependent input laws; exercises the non-identically-distributed
  // part of the guarantees.
  static DataModel staggered(int periods, double noise, double target = 0.5) {
    if (periods < 1)
      throw std::invalid_argument("data model: periods must be >= 1");
    if (!(noise >= 0.0 && noise < 0.5))
      throw std::invalid_argument("data model: noise must lie in [0, 0.5)");
    DataModel m;
    m.noise = noise;
    m.target_threshold = target;
    m.ranges.clear();
    for (int i = 0; i < periods; ++i) {
      const double lo = 0.08 * double(i % 3);
      const double hi = 1.0 - 0.06 * double((i + 1) % 4);
      m.ranges.emplace_back(lo, hi);
    }
    return m;
  }

  bool identical_uniform01() const {
    return ranges.size() == 1 && ranges[0].first == 0.0 &&
           ranges[0].second == 1.0;
  }

  // Average misclassification probability of the threshold classifier
  // x -> 1[x > t] under U[0,1] inputs with symmetric flip noise.
  double true_risk_threshold(double t) const {
    if (!identical_uniform01())
      throw std::invalid_argument(
          "true risk: closed form needs identical U[0,1] inputs");
    const double a = std::clamp(t, 0.0, 1.0);
    const double b = std::clamp(target_threshold, 0.0, 1.0);
    return noise + (1.0 - 2.0 * noise) * std::fabs(a - b);
  }
};

// Distinct restriction patterns of the class on a fixed design (one label
// vector per equivalence class of classifiers).
inline std::vector<std::vector<std::uint8_t>> effective_class(
    const HypothesisClass& cls, const std::vector<double>& design) {
  if (design.empty())
    throw std::invalid_argument("effective_class: empty design");
  std::vector<std::vector<std::uint8_t>> rows;
  switch (cls.kind) {
    case HypothesisClass::Kind::Thresholds1D:
      for (double t : cls.grid) {
        std::vector<std::uint8_t> row(design.size());
        for (std::size_t i = 0; i < design.size(); ++i)
          row[i] = design[i] > t ? 1 : 0;
        rows.push_back(std::move(row));
      }
      break;
    case HypothesisClass::Kind::Intervals1D:
      for (std::size_t ai = 0; ai < cls.grid.size(); ++ai)
        for (std::size_t bi = ai; bi < cls.grid.size(); ++bi) {
          std::vector<std::uint8_t> row(design.size());
          for (std::size_t i = 0; i < design.size(); ++i)
            row[i] =
                (design[i] >= cls.grid[ai] && design[i] <= cls.grid[bi]) ? 1 : 0;
          rows.push_back(std::move(row));
        }
      break;
    case HypothesisClass::Kind::ExplicitFinite:
      for (const auto& row : cls.label_rows) {
        if (row.size() != design.size())
          throw std::invalid_argument(
              "effective_class: label row length does not match design");
        rows.push_back(row);
      }
      break;
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

// One sampled design with per-pattern empirical error rates.
struct TrialResult {
  std::vector<double> xs;  // inputs, index i + m*N is copy m of index i
  std::vector<std::uint8_t> ys;
  std::vector<double> pattern_r1;  // per effective pattern
  std::vector<double> pattern_r2;
  double log_effective = 0.0;  // ln(#effective patterns)
  // Index of each grid classifier's pattern (thresholds / intervals kinds).
  std::vector<std::uint32_t> classifier_pattern;
};

namespace detail {

struct SortedDesign {
  std::vector<double> sorted_x;
  // prefix counts over sorted ranks: train/test points with label 1/0
  std::vector<std::int32_t> train1, train0, test1, test0;
};

inline SortedDesign sort_design(const std::vector<double>& xs,
                                const std::vector<std::uint8_t>& ys,
                                std::int64_t n) {
  const std::size_t m = xs.size();
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (xs[a] != xs[b]) return xs[a] < xs[b];
    return a < b;
  });
  SortedDesign sd;
  sd.sorted_x.resize(m);
  sd.train1.assign(m + 1, 0);
  sd.train0.assign(m + 1, 0);
  sd.test1.assign(m + 1, 0);
  sd.test0.assign(m + 1, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::uint32_t idx = order[r];
    sd.sorted_x[r] = xs[idx];
    const bool is_train = idx < std::uint32_t(n);
    const bool is_one = ys[idx] != 0;
    sd.train1[r + 1] = sd.train1[r] + (is_train && is_one ? 1 : 0);
    sd.train0[r + 1] = sd.train0[r] + (is_train && !is_one ? 1 : 0);
    sd.test1[r + 1] = sd.test1[r] + (!is_train && is_one ? 1 : 0);
    sd.test0[r + 1] = sd.test0[r] + (!is_train && !is_one ? 1 : 0);
  }
  return sd;
}

// Error rates of the classifier that predicts 1 exactly on sorted ranks in
// (lo, hi].
inline std::pair<double, double> cut_errors(const SortedDesign& sd,
                                            std::int64_t n, std::int64_t k,
                                            std::size_t lo, std::size_t hi) {
  const std::size_t m = sd.sorted_x.size();
  const std::int32_t tr1_in = sd.train1[hi] - sd.train1[lo];
  const std::int32_t tr0_in = sd.train0[hi] - sd.train0[lo];
  const std::int32_t te1_in = sd.test1[hi] - sd.test1[lo];
  const std::int32_t te0_in = sd.test0[hi] - sd.test0[lo];
  const std::int32_t tr1_total = sd.train1[m];
  const std::int32_t te1_total = sd.test1[m];
  const double train_err = double((tr1_total - tr1_in) + tr0_in);
  const double test_err = double((te1_total - te1_in) + te0_in);
  return {train_err / double(n), test_err / double(k * n)};
}

}  // namespace detail

inline TrialResult run_trial(const DataModel& model, const HypothesisClass& cls,
                             std::int64_t n, std::int64_t k, std::uint64_t seed,
                             std::uint64_t trial = 0) {
  if (n < 1) throw std::invalid_argument("run_trial: N must be >= 1");
  if (k < 1) throw std::invalid_argument("run_trial: k must be >= 1");
  if (cls.kind == HypothesisClass::Kind::ExplicitFinite)
    throw std::invalid_argument(
        "run_trial: explicit classes have no sampling model");

  const std::int64_t m = (k + 1) * n;
  TrialResult tr;
  tr.xs.resize(std::size_t(m));
  tr.ys.resize(std::size_t(m));
  RandomStream rng(seed, trial);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto& range = model.ranges[std::size_t(i % n) % model.ranges.size()];
    const double x = range.first + (range.second - range.first) * rng.next_unit();
    const bool base = x > model.target_threshold;
    const bool flip = rng.next_bernoulli(model.noise);
    tr.xs[std::size_t(i)] = x;
    tr.ys[std::size_t(i)] = std::uint8_t(base != flip ? 1 : 0);
  }

  const detail::SortedDesign sd = detail::sort_design(tr.xs, tr.ys, n);
  // Pattern key: the sorted-rank window (lo, hi] a classifier selects.
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> pattern_index;
  auto pattern_of = [&](std::size_t lo, std::size_t hi) {
    if (lo >= hi) lo = hi = 0;  // all empty selections are one pattern
    const auto [it, inserted] =
        pattern_index.try_emplace({lo, hi}, std::uint32_t(pattern_index.size()));
    if (inserted) {
      const auto [r1, r2] = detail::cut_errors(sd, n, k, lo, hi);
      tr.pattern_r1.push_back(r1);
      tr.pattern_r2.push_back(r2);
    }
    return it->second;
  };

  if (cls.kind == HypothesisClass::Kind::Thresholds1D) {
    for (double t : cls.grid) {
      // predicts 1 on points with x > t
      const std::size_t lo = std::size_t(
          std::upper_bound(sd.sorted_x.begin(), sd.sorted_x.end(), t) -
          sd.sorted_x.begin());
      tr.classifier_pattern.push_back(pattern_of(lo, sd.sorted_x.size()));
    }
  } else {
    for (std::size_t ai = 0; ai < cls.grid.size(); ++ai) {
      const std::size_t lo = std::size_t(
          std::lower_bound(sd.sorted_x.begin(), sd.sorted_x.end(),
                           cls.grid[ai]) -
          sd.sorted_x.begin());
      for (std::size_t bi = ai; bi < cls.grid.size(); ++bi) {
        const std::size_t hi = std::size_t(
            std::upper_bound(sd.sorted_x.begin(), sd.sorted_x.end(),
                             cls.grid[bi]) -
            sd.sorted_x.begin());
        tr.classifier_pattern.push_back(pattern_of(lo, hi));
      }
    }
  }

  tr.log_effective = std::log(double(tr.pattern_r1.size()));
  const double cap = sauer_log_growth(cls.vc_dim(), m);
  if (tr.log_effective > cap + 1e-9)
    throw std::logic_error("run_trial: effective class exceeds the Sauer cap");
  return tr;
}

struct VerificationReport {
  std::string theorem;
  std::string hypothesis_class;
  std::int64_t n = 0;
  std::int64_t k = 0;
  double epsilon = 0.0;
  double noise = 0.0;
  std::int64_t class_size = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::int64_t violations = 0;
  double violation_rate = 0.0;
  double upper_confidence_99 = 0.0;  // exact one-sided binomial limit
  double target = 0.0;               // eps, or 2 eps for the chained bound
  bool pass = false;
};

// Smallest p with P(Binomial(trials, p) <= violations) <= 1 - level.
inline double binomial_upper_limit(std::int64_t violations, std::int64_t trials,
                                   double level = 0.99) {
  if (trials < 1)
    throw std::invalid_argument("binomial_upper_limit: trials must be >= 1");
  if (violations < 0 || violations > trials)
    throw std::invalid_argument("binomial_upper_limit: bad violation count");
  if (violations == trials) return 1.0;
  const double tail = 1.0 - level;
  auto cdf = [&](double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return 0.0;
    double sum = 0.0;
    for (std::int64_t i = 0; i <= violations; ++i) {
      const double logterm = std::lgamma(double(trials) + 1.0) -
                             std::lgamma(double(i) + 1.0) -
                             std::lgamma(double(trials - i) + 1.0) +
                             double(i) * std::log(p) +
                             double(trials - i) * std::log1p(-p);
      sum += std::exp(logterm);
    }
    return sum;
  };
  double lo = double(violations) / double(trials);
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) > tail)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace detail {

inline bool verify_supported(Theorem t) {
  switch (t) {
    case Theorem::TransductiveBasic:
    case Theorem::TransductiveImprovedK1:
    case Theorem::TransductiveImproved:
    case Theorem::RelativeChained:
    case Theorem::InductiveIntegrated:
    case Theorem::InductiveIntegratedTight:
    case Theorem::InductiveBasicVariance:
    case Theorem::InductiveExchangeableK1:
    case Theorem::InductiveNearOptimalLambda:
    case Theorem::InductiveExchangeableLambda:
      return true;
    default:
      return false;
  }
}

// Does the trial hold a pattern/classifier that exceeds its bound?
inline bool trial_violates(Theorem t, const TrialResult& tr,
                           const DataModel& model, const HypothesisClass& cls,
                           std::int64_t n, std::int64_t k, double epsilon,
                           const ChainedEvaluator* chained) {
  const double log_inv_eps = std::log(1.0 / epsilon);
  if (is_transductive(t)) {
    const double d_exact = tr.log_effective + log_inv_eps;
    for (std::size_t p = 0; p < tr.pattern_r1.size(); ++p) {
      const double r1 = tr.pattern_r1[p];
      const double r2 = tr.pattern_r2[p];
      if (t == Theorem::RelativeChained) {
        const auto best = chained->best(r1);
        if (!best) continue;  // level set certifies nothing for this pattern
        if (r1 < 0.5 && best->value < 0.5 && r2 > best->value) return true;
        continue;
      }
      BoundInput in{n, k, epsilon, r1, ComplexitySpec::explicit_d(d_exact)};
      const BoundResult res = evaluate_bound(t, in);
      if (!res.valid) continue;
      if (r2 > res.value) return true;
    }
    return false;
  }
  // Inductive targets: iterate the classifiers themselves, since distinct
  // classifiers sharing a pattern still have distinct true risks.
  const double d_cap = std::log(double(cls.size())) + log_inv_eps;
  for (std::size_t c = 0; c < tr.classifier_pattern.size(); ++c) {
    const double r1 = tr.pattern_r1[tr.classifier_pattern[c]];
    const double risk = model.true_risk_threshold(cls.grid[c]);
    BoundInput in{n, k, epsilon, r1, ComplexitySpec::explicit_d(d_cap)};
    const BoundResult res = evaluate_bound(t, in);
    if (!res.valid) continue;
    if (risk > res.value) return true;
  }
  return false;
}

}  // namespace detail

inline VerificationReport verify(Theorem t, const DataModel& model,
                                 const HypothesisClass& cls, std::int64_t n,
                                 std::int64_t k, double epsilon,
                                 std::int64_t trials, std::uint64_t seed,
                                 int threads = 1) {
  if (!detail::verify_supported(t))
    throw std::invalid_argument(std::string("verify: no simulation target for ") +
                                theorem_name(t));
  if (trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("verify: epsilon must lie in (0,1)");
  if ((t == Theorem::TransductiveImprovedK1 ||
       t == Theorem::InductiveExchangeableK1 ||
       t == Theorem::InductiveExchangeableLambda) &&
      k != 1)
    throw std::invalid_argument(std::string("verify: ") + theorem_name(t) +
                                " requires k = 1");
  if (cls.kind == HypothesisClass::Kind::ExplicitFinite)
    throw std::invalid_argument("verify: explicit classes have no sampling model");
  if (!is_transductive(t)) {
    if (cls.kind != HypothesisClass::Kind::Thresholds1D)
      throw std::invalid_argument(
          "verify: inductive targets need the thresholds class (closed-form risk)");
    if (!model.identical_uniform01())
      throw std::invalid_argument(
          "verify: inductive targets need identical U[0,1] inputs "
          "(closed-form risk)");
  }

  ChainedEvaluator const* chained = nullptr;
  std::optional<ChainedEvaluator> chained_storage;
  if (t == Theorem::RelativeChained) {
    chained_storage.emplace(n, k, cls.vc_dim(), epsilon);
    chained = &*chained_storage;
  }

  if (threads < 1) threads = 1;
  const int workers = int(std::min<std::int64_t>(threads, trials));
  std::vector<std::int64_t> local_counts(std::size_t(workers), 0);
  auto work = [&](int w) {
    const std::int64_t lo = trials * w / workers;
    const std::int64_t hi = trials * (w + 1) / workers;
    std::int64_t count = 0;
    for (std::int64_t trial = lo; trial < hi; ++trial) {
      const TrialResult tr =
          run_trial(model, cls, n, k, seed, std::uint64_t(trial));
      if (detail::trial_violates(t, tr, model, cls, n, k, epsilon, chained))
        ++count;
    }
    local_counts[std::size_t(w)] = count;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }

  VerificationReport rep;
  rep.theorem = theorem_name(t);
  rep.hypothesis_class = cls.name();
  rep.n = n;
  rep.k = k;
  rep.epsilon = epsilon;
  rep.noise = model.noise;
  rep.class_size = cls.size();
  rep.trials = trials;
  rep.seed = seed;
  rep.threads = threads;
  rep.violations = std::accumulate(local_counts.begin(), local_counts.end(),
                                   std::int64_t(0));
  rep.violation_rate = double(rep.violations) / double(trials);
  rep.upper_confidence_99 = binomial_upper_limit(rep.violations, trials, 0.99);
  rep.target = t == Theorem::RelativeChained ? 2.0 * epsilon : epsilon;
  rep.pass = rep.upper_confidence_99 <= rep.target ||
             rep.violation_rate <= rep.target;
  return rep;
}

}  // namespace vcb
