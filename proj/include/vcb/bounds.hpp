#pragma once
// Closed-form evaluators for the transductive and inductive generalization
// bounds.  Every bound is the exact largest solution of an implicit
// deviation inequality in the test error rate (or true risk); the test
// suite cross-checks each closed form against bisection on its defining
// inequality.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vcb/complexity.hpp"

namespace vcb {

enum class Theorem {
  Vapnik,
  PreviousPac,
  TransductiveBasic,
  TransductiveImprovedK1,
  TransductiveImproved,
  InductiveIntegrated,
  InductiveIntegratedTight,
  InductiveBasicVariance,
  InductiveExchangeableK1,
  InductiveNearOptimalLambda,
  InductiveExchangeableLambda,
  RelativeChained,
};

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Vapnik: return "vapnik";
    case Theorem::PreviousPac: return "previous-pac";
    case Theorem::TransductiveBasic: return "transductive-basic";
    case Theorem::TransductiveImprovedK1: return "transductive-improved-k1";
    case Theorem::TransductiveImproved: return "transductive-improved";
    case Theorem::InductiveIntegrated: return "inductive-integrated";
    case Theorem::InductiveIntegratedTight: return "inductive-integrated-tight";
    case Theorem::InductiveBasicVariance: return "inductive-basic-variance";
    case Theorem::InductiveExchangeableK1: return "inductive-exchangeable-k1";
    case Theorem::InductiveNearOptimalLambda: return "inductive-near-optimal-lambda";
    case Theorem::InductiveExchangeableLambda: return "inductive-exchangeable-lambda";
    case Theorem::RelativeChained: return "relative-chained";
  }
  return "unknown";
}

inline const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> list = {
      Theorem::Vapnik,
      Theorem::PreviousPac,
      Theorem::TransductiveBasic,
      Theorem::TransductiveImprovedK1,
      Theorem::TransductiveImproved,
      Theorem::InductiveIntegrated,
      Theorem::InductiveIntegratedTight,
      Theorem::InductiveBasicVariance,
      Theorem::InductiveExchangeableK1,
      Theorem::InductiveNearOptimalLambda,
      Theorem::InductiveExchangeableLambda,
      Theorem::RelativeChained,
  };
  return list;
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : all_theorems())
    if (name == theorem_name(t)) return t;
  return std::nullopt;
}

// Bounds whose target is the test (shadow) error rate rather than the risk.
inline bool is_transductive(Theorem t) {
  return t == Theorem::TransductiveBasic || t == Theorem::TransductiveImprovedK1 ||
         t == Theorem::TransductiveImproved || t == Theorem::RelativeChained;
}

// Problem instance fed to every bound evaluator.
struct BoundInput {
  std::int64_t n = 1;     // labeled sample size
  std::int64_t k = 1;     // shadow sample holds k*n extra points
  double epsilon = 0.05;  // confidence parameter
  double r1 = 0.0;        // empirical error on the labeled sample
  ComplexitySpec complexity{};

  void check() const {
    if (n < 1) throw std::invalid_argument("bound input: N must be >= 1");
    if (k < 1) throw std::invalid_argument("bound input: k must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw std::invalid_argument("bound input: epsilon must lie in (0,1)");
    if (!(r1 >= 0.0 && r1 <= 1.0))
      throw std::invalid_argument("bound input: r1 must lie in [0,1]");
  }
};

struct BoundResult {
  Theorem theorem{};
  double value = 0.0;        // bound on the test error rate / true risk
  bool significant = false;  // below 1/2, i.e. better than random guessing
  bool valid = true;         // stated side conditions of the theorem hold
  double confidence = 0.0;   // 1 - eps (1 - 2 eps for the chained bound)
  bool r1_on_grid = true;    // n * r1 is (near) an integer error count
  std::map<std::string, double> terms;  // intermediate quantities
};

// Extra knobs for the bounds that have free parameters beyond (N, k).
struct BoundOptions {
  std::optional<double> alpha;  // empty: the 0.5*sqrt(pi/d) rule
  std::optional<double> dbar;   // empty: the VC-capped variant
  std::optional<int> level;     // empty: best chaining level
  bool weakened = false;        // simplified exchangeable k=1 form
  double zeta = 2.0;            // only the comparison bound uses it
};

// Capped Bernoulli variance p(1-p), flat at 1/4 past p = 1/2.
inline double capped_variance(double p) {
  const double q = std::min(p, 0.5);
  return q * (1.0 - q);
}

// (e^x - 1 - x) / x^2, continued by 1/2 at x = 0; increasing on the whole
// line.  The power series sum_{i>=0} x^i/(i+2)! avoids cancellation near 0.
inline double bernstein_g(double x) {
  if (std::fabs(x) < 0.125) {
    double term = 0.5;
    double sum = 0.5;
    for (int i = 1; i < 20; ++i) {
      term *= x / double(i + 2);
      sum += term;
      if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return (std::expm1(x) - x) / (x * x);
}

// Largest x satisfying x - r1 <= sqrt(c1 + c2 x).
inline double solve_sqrt_inequality(double r1, double c1, double c2) {
  if (!(r1 >= 0.0 && r1 <= 1.0))
    throw std::invalid_argument("solve_sqrt_inequality: r1 must lie in [0,1]");
  if (!(c1 >= 0.0) || !(c2 >= 0.0))
    throw std::invalid_argument("solve_sqrt_inequality: c1, c2 must be >= 0");
  return r1 + 0.5 * c2 + std::sqrt(c1 + c2 * r1 + 0.25 * c2 * c2);
}

namespace detail {

inline std::int64_t full_design(const BoundInput& in) { return (in.k + 1) * in.n; }

inline bool r1_on_grid(const BoundInput& in) {
  const double count = in.r1 * double(in.n);
  return std::fabs(count - std::round(count)) <= 1e-9;
}

inline BoundResult make_result(Theorem t, const BoundInput& in, double value,
                               bool valid, double confidence) {
  BoundResult res;
  res.theorem = t;
  res.value = value;
  res.significant = value < 0.5;
  res.valid = valid;
  res.confidence = confidence;
  res.r1_on_grid = r1_on_grid(in);
  return res;
}

// Largest solution of (x - r1)^2 = (2 dp / n) x (1 - x).
inline double solve_variance_shape(double r1, double dp, double n) {
  const double s = dp / n;
  return (r1 + s + std::sqrt(2.0 * s * r1 * (1.0 - r1) + s * s)) /
         (1.0 + 2.0 * s);
}

inline double resolve_alpha(const BoundOptions& opts, double d) {
  if (opts.alpha) {
    if (!(*opts.alpha > 0.0))
      throw std::invalid_argument("alpha must be > 0");
    return *opts.alpha;
  }
  return 0.5 * std::sqrt(std::numbers::pi / d);
}

// c = 2 a sqrt((d - ln a)/pi) + a^2/pi, the price of integrating out the
// deviation scale; requires d - ln a >= 0.
inline double integration_cost(double d, double alpha) {
  const double shifted = d - std::log(alpha);
  if (shifted < 0.0)
    throw std::invalid_argument("alpha too large for complexity exponent d");
  return 2.0 * alpha * std::sqrt(shifted / std::numbers::pi) +
         alpha * alpha / std::numbers::pi;
}

}  // namespace detail

// Classical two-sample symmetrization bound (the baseline to beat):
// R <= r1 + (2 d'/N)(1 + sqrt(1 + N r1 / d')), d' over a 2N design at
// confidence epsilon/4.  The shadow sample size is fixed at N; k is ignored.
inline BoundResult vapnik_bound(const BoundInput& in) {
  in.check();
  const double n = double(in.n);
  const double dp = d_term(in.complexity, 2 * in.n, in.epsilon / 4.0);
  const double value =
      in.r1 + (2.0 * dp / n) * (1.0 + std::sqrt(1.0 + n * in.r1 / dp));
  BoundResult res = detail::make_result(Theorem::Vapnik, in, value, true,
                                        1.0 - in.epsilon);
  res.terms["d_prime"] = dp;
  return res;
}

// Earlier PAC-Bayesian comparison bound with free scale zeta > 1:
// R <= r1 + (zeta d / N)(1 + sqrt(1 + 4 N r1/(zeta d))).
inline BoundResult previous_pac_bound(const BoundInput& in, double zeta) {
  in.check();
  if (!(zeta > 1.0))
    throw std::invalid_argument("previous-pac: zeta must be > 1");
  const double n = double(in.n);
  // entropy term ln(ln(2 zeta N) / (eps ln zeta)) folded as a modified eps
  const double eps_mod =
      in.epsilon * std::log(zeta) / std::log(2.0 * zeta * n);
  const double d = d_term(in.complexity, 2 * in.n, eps_mod);
  const double value = in.r1 + (zeta * d / n) *
                                   (1.0 + std::sqrt(1.0 + 4.0 * n * in.r1 /
                                                              (zeta * d)));
  BoundResult res = detail::make_result(Theorem::PreviousPac, in, value, true,
                                        1.0 - in.epsilon);
  res.terms["d"] = d;
  res.terms["zeta"] = zeta;
  return res;
}

// Shadow-sample bound with the basic variance term:
// r2 <= r1 + d/N + sqrt(2 d (1 + 1/k) r1 / N + d^2/N^2), d over (k+1)N.
inline BoundResult transductive_basic(const BoundInput& in) {
  in.check();
  const double n = double(in.n);
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  const double value =
      in.r1 + d / n +
      std::sqrt(2.0 * d * (1.0 + 1.0 / double(in.k)) * in.r1 / n +
                d * d / (n * n));
  BoundResult res = detail::make_result(Theorem::TransductiveBasic, in, value,
                                        true, 1.0 - in.epsilon);
  res.terms["d"] = d;
  return res;
}

// Equal-split variant with the exact pairwise variance r1 + r2 - 2 r1 r2;
// only defined for k = 1.
inline BoundResult transductive_improved_k1(const BoundInput& in) {
  in.check();
  if (in.k != 1)
    throw std::invalid_argument("transductive-improved-k1: requires k = 1");
  const double n = double(in.n);
  const double d = d_term(in.complexity, 2 * in.n, in.epsilon);
  const double s = d / n;
  const double balance = 1.0 - 2.0 * in.r1;
  const double value =
      in.r1 + s * balance +
      std::sqrt(4.0 * s * in.r1 * (1.0 - in.r1) + s * s * balance * balance);
  BoundResult res = detail::make_result(Theorem::TransductiveImprovedK1, in,
                                        value, true, 1.0 - in.epsilon);
  res.terms["d"] = d;
  return res;
}

// Shadow-sample bound with the capped-variance term, any k:
// B = (1 + 2d/N)^-1 { r1 + (d/N)(1 + (1 - 2 r1)/k)
//                     + (1 + 1/k) sqrt(2 d r1 (1 - r1)/N + d^2/N^2) }.
// The guarantee applies when r1 < 1/2 and B <= 1/2.
inline BoundResult transductive_improved(const BoundInput& in) {
  in.check();
  const double n = double(in.n);
  const double kk = double(in.k);
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  const double s = d / n;
  const double value =
      (in.r1 + s * (1.0 + (1.0 - 2.0 * in.r1) / kk) +
       (1.0 + 1.0 / kk) * std::sqrt(2.0 * s * in.r1 * (1.0 - in.r1) + s * s)) /
      (1.0 + 2.0 * s);
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::TransductiveImproved, in,
                                        value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  return res;
}

// Risk bound obtained by integrating the deviation scale out:
// d' = d (1 + 1/k)^2 (1 - ln(a)/(2d) + a/sqrt(pi d))^2, then the standard
// variance shape in d'.
inline BoundResult inductive_integrated(const BoundInput& in,
                                        std::optional<double> alpha = {}) {
  in.check();
  const double n = double(in.n);
  const double kk = double(in.k);
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  const double a = detail::resolve_alpha({.alpha = alpha}, d);
  const double inflate =
      1.0 - std::log(a) / (2.0 * d) + a / std::sqrt(std::numbers::pi * d);
  const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
  const double dp = d * ksq * inflate * inflate;
  const double value = detail::solve_variance_shape(in.r1, dp, n);
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::InductiveIntegrated, in,
                                        value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  res.terms["alpha"] = a;
  res.terms["d_prime"] = dp;
  return res;
}

// Same integration carried out without the final weakening; four inflated
// exponents d1..d4 replace the single d'.
inline BoundResult inductive_integrated_tight(const BoundInput& in,
                                              std::optional<double> alpha = {}) {
  in.check();
  const double n = double(in.n);
  const double kk = double(in.k);
  const double kp = 1.0 + 1.0 / kk;
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  const double a = detail::resolve_alpha({.alpha = alpha}, d);
  const double c = detail::integration_cost(d, a);
  const double shifted = d - std::log(a);
  const double d1 = shifted + kp * kp * c;
  const double d2 = kp * (shifted * (1.0 - 2.0 * in.r1 / (1.0 + kk)) + kp * c);
  const double d3 =
      kp * kp * (shifted + c + 2.0 * c * shifted / (n * kk * kk));
  const double d4 = kp * (shifted + kp * c);
  const double value =
      (in.r1 + d2 / n +
       std::sqrt(2.0 * d3 * in.r1 * (1.0 - in.r1) / n + d4 * d4 / (n * n))) /
      (1.0 + 2.0 * d1 / n);
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::InductiveIntegratedTight, in,
                                        value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  res.terms["alpha"] = a;
  res.terms["c"] = c;
  res.terms["d1"] = d1;
  res.terms["d2"] = d2;
  res.terms["d3"] = d3;
  res.terms["d4"] = d4;
  return res;
}

// Risk bound with the basic (uncapped) variance term; kept as the
// illustration of how much the capped variance buys.
inline BoundResult inductive_basic_variance(const BoundInput& in,
                                            std::optional<double> alpha = {}) {
  in.check();
  const double n = double(in.n);
  const double kk = double(in.k);
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  const double a = detail::resolve_alpha({.alpha = alpha}, d);
  const double inflate =
      1.0 - std::log(a) / (2.0 * d) + a / std::sqrt(std::numbers::pi * d);
  const double dp = (1.0 + 1.0 / kk) * inflate * inflate * d;
  const double value = solve_sqrt_inequality(in.r1, 0.0, 2.0 * dp / n);
  BoundResult res = detail::make_result(Theorem::InductiveBasicVariance, in,
                                        value, true, 1.0 - in.epsilon);
  res.terms["d"] = d;
  res.terms["alpha"] = a;
  res.terms["d_prime"] = dp;
  return res;
}

// Fully exchangeable risk bound at k = 1, in the exact (full) form or the
// weakened d'' = d' + 2c simplification.
inline BoundResult inductive_exchangeable_k1(const BoundInput& in,
                                             std::optional<double> alpha = {},
                                             bool weakened = false) {
  in.check();
  if (in.k != 1)
    throw std::invalid_argument("inductive-exchangeable-k1: requires k = 1");
  const double n = double(in.n);
  const double d = d_term(in.complexity, 2 * in.n, in.epsilon);
  const double a = detail::resolve_alpha({.alpha = alpha}, d);
  const double c = detail::integration_cost(d, a);
  const double dp = d - std::log(a);
  const double balance = 1.0 - 2.0 * in.r1;
  double value = 0.0;
  if (weakened) {
    const double dpp = dp + 2.0 * c;
    value = in.r1 + balance * dpp / n +
            std::sqrt(4.0 * dpp * in.r1 * (1.0 - in.r1) / n +
                      dpp * dpp * balance * balance / (n * n));
  } else {
    value = (in.r1 + balance * dp / n + 2.0 * c / n +
             std::sqrt(4.0 * (dp + c) * in.r1 * (1.0 - in.r1) / n +
                       dp * dp * balance * balance / (n * n) +
                       4.0 * c * (dp + c) / (n * n))) /
            (1.0 + 4.0 * c / n);
  }
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::InductiveExchangeableK1, in,
                                        value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  res.terms["alpha"] = a;
  res.terms["c"] = c;
  res.terms["d_prime"] = dp;
  if (weakened) res.terms["d_double_prime"] = dp + 2.0 * c;
  return res;
}

// Risk bound from a near-optimal deviation scale:
// d' = (1/4)(1 + 1/k)^2 (dbar + d)(1 + d/dbar), or the uniform cap
// d' = d* (1 + 1/k)^2 with d* over the full (k+1)N design.
inline BoundResult inductive_near_optimal_lambda(const BoundInput& in,
                                                 std::optional<double> dbar = {}) {
  in.check();
  const double n = double(in.n);
  const double kk = double(in.k);
  const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
  const double d = d_term(in.complexity, detail::full_design(in), in.epsilon);
  double dp = 0.0;
  if (dbar) {
    if (!(*dbar > 0.0))
      throw std::invalid_argument(
          "inductive-near-optimal-lambda: dbar must be > 0");
    dp = 0.25 * ksq * (*dbar + d) * (1.0 + d / *dbar);
  } else {
    dp = ksq * d;
  }
  const double value = detail::solve_variance_shape(in.r1, dp, n);
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::InductiveNearOptimalLambda,
                                        in, value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  if (dbar) res.terms["dbar"] = *dbar;
  res.terms["d_prime"] = dp;
  return res;
}

// Fully exchangeable variant of the near-optimal scale bound (k = 1):
// d' = (1/2) dbar (1 + d/dbar)^2, or the uniform cap d' = 2 d* with d*
// over an N design.
inline BoundResult inductive_exchangeable_lambda(const BoundInput& in,
                                                 std::optional<double> dbar = {}) {
  in.check();
  if (in.k != 1)
    throw std::invalid_argument(
        "inductive-exchangeable-lambda: requires k = 1");
  const double n = double(in.n);
  double dp = 0.0;
  double d = 0.0;
  if (dbar) {
    if (!(*dbar > 0.0))
      throw std::invalid_argument(
          "inductive-exchangeable-lambda: dbar must be > 0");
    d = d_term(in.complexity, 2 * in.n, in.epsilon);
    const double ratio = 1.0 + d / *dbar;
    dp = 0.5 * *dbar * ratio * ratio;
  } else {
    d = d_term(in.complexity, in.n, in.epsilon);
    dp = 2.0 * d;
  }
  const double value = detail::solve_variance_shape(in.r1, dp, n);
  const bool valid = in.r1 < 0.5 && value <= 0.5;
  BoundResult res = detail::make_result(Theorem::InductiveExchangeableLambda,
                                        in, value, valid, 1.0 - in.epsilon);
  res.terms["d"] = d;
  if (dbar) res.terms["dbar"] = *dbar;
  res.terms["d_prime"] = dp;
  return res;
}

// Chained relative bound.  Construction is split out so sweeps over many
// error rates (or many k) can reuse the per-level constants.
class ChainedEvaluator {
 public:
  ChainedEvaluator(std::int64_t n, std::int64_t k, std::int64_t h,
                   double epsilon)
      : n_(n), k_(k), epsilon_(epsilon), levels_(chain_levels(n, k, h, epsilon)) {
    const double kk = double(k_);
    const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
    per_level_.reserve(levels_.size());
    for (const ChainLevel& lvl : levels_) {
      PerLevel p;
      p.a = (bernstein_g(std::sqrt(8.0 * lvl.d / (lvl.xi * double(n_)))) + 0.5) *
            std::sqrt(2.0 * ksq * lvl.xi * lvl.d / double(n_));
      p.b = std::sqrt(2.0 * ksq * lvl.d_prime / double(n_));
      per_level_.push_back(p);
    }
  }

  const std::vector<ChainLevel>& levels() const { return levels_; }

  // Largest r2 certified by level `idx`, or nothing when the level's
  // quadratic has no real solution.
  std::optional<double> level_value(std::size_t idx, double r1) const {
    const ChainLevel& lvl = levels_[idx];
    const PerLevel& p = per_level_[idx];
    const double kk = double(k_);
    const double kp1 = kk + 1.0;
    const double a = p.a;
    const double b = p.b;
    const double qa = 1.0 + (kk * b / kp1) * (kk * b / kp1);
    const double qb = r1 + a +
                      kk * b * b / (2.0 * kp1 * kp1) *
                          (kp1 * (1.0 - 2.0 * lvl.xi) - 2.0 * r1);
    const double qc = (r1 + a) * (r1 + a) -
                      b * b / (kp1 * kp1) * (kp1 * lvl.xi + r1) *
                          (kp1 * (1.0 - lvl.xi) - r1);
    const double disc = qb * qb - qa * qc;
    if (disc < 0.0) return std::nullopt;
    return (qb + std::sqrt(disc)) / qa;
  }

  struct Best {
    double value = 0.0;
    std::size_t index = 0;
  };

  std::optional<Best> best(double r1) const {
    std::optional<Best> best;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const std::optional<double> v = level_value(i, r1);
      if (v && (!best || *v < best->value)) best = Best{*v, i};
    }
    return best;
  }

  double level_deviation(std::size_t idx) const { return per_level_[idx].a; }
  double level_scale(std::size_t idx) const { return per_level_[idx].b; }

 private:
  struct PerLevel {
    double a = 0.0;  // additive deviation paid for snapping to the net
    double b = 0.0;  // scale of the variance term at the net
  };

  std::int64_t n_ = 0;
  std::int64_t k_ = 0;
  double epsilon_ = 0.0;
  std::vector<ChainLevel> levels_;
  std::vector<PerLevel> per_level_;
};

// Chained relative bound over the available resolution levels; holds with
// confidence 1 - 2 epsilon.  `level` empty means best available level.
inline BoundResult relative_chained(const BoundInput& in,
                                    std::optional<int> level = {}) {
  in.check();
  if (in.complexity.kind != ComplexitySpec::Kind::VcDim)
    throw std::invalid_argument(
        "relative-chained: complexity must be a VC dimension");
  if (in.n < 2)
    throw std::invalid_argument("relative-chained: requires N >= 2");
  const ChainedEvaluator eval(in.n, in.k, in.complexity.vc, in.epsilon);
  const auto& levels = eval.levels();

  auto tried = [&]() {
    std::ostringstream os;
    os << "levels tried:";
    for (const ChainLevel& lvl : levels) os << " j=" << lvl.j;
    return os.str();
  };
  if (levels.empty())
    throw std::invalid_argument(
        "relative-chained: no chaining level available (N too small)");

  std::size_t chosen = 0;
  double value = 0.0;
  if (level) {
    bool found = false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i].j == *level) {
        const std::optional<double> v = eval.level_value(i, in.r1);
        if (!v)
          throw std::invalid_argument(
              "relative-chained: level j=" + std::to_string(*level) +
              " certifies no bound; " + tried());
        chosen = i;
        value = *v;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("relative-chained: level j=" +
                                  std::to_string(*level) +
                                  " unavailable; " + tried());
  } else {
    const std::optional<ChainedEvaluator::Best> best = eval.best(in.r1);
    if (!best)
      throw std::invalid_argument(
          "relative-chained: no level certifies a bound; " + tried());
    chosen = best->index;
    value = best->value;
  }

  const ChainLevel& lvl = levels[chosen];
  const bool valid = in.r1 < 0.5 && value < 0.5;
  BoundResult res = detail::make_result(Theorem::RelativeChained, in, value,
                                        valid, 1.0 - 2.0 * in.epsilon);
  res.terms["j"] = double(lvl.j);
  res.terms["xi_j"] = lvl.xi;
  res.terms["d_j"] = lvl.d;
  res.terms["d_j_prime"] = lvl.d_prime;
  res.terms["a_j"] = eval.level_deviation(chosen);
  res.terms["b_j"] = eval.level_scale(chosen);
  res.terms["phi_arg"] =
      (in.r1 + double(in.k) * value) / (double(in.k) + 1.0) + lvl.xi;
  return res;
}

// Dispatch by tag; the options carry the per-theorem extras.
inline BoundResult evaluate_bound(Theorem t, const BoundInput& in,
                                  const BoundOptions& opts = {}) {
  switch (t) {
    case Theorem::Vapnik: return vapnik_bound(in);
    case Theorem::PreviousPac: return previous_pac_bound(in, opts.zeta);
    case Theorem::TransductiveBasic: return transductive_basic(in);
    case Theorem::TransductiveImprovedK1: return transductive_improved_k1(in);
    case Theorem::TransductiveImproved: return transductive_improved(in);
    case Theorem::InductiveIntegrated:
      return inductive_integrated(in, opts.alpha);
    case Theorem::InductiveIntegratedTight:
      return inductive_integrated_tight(in, opts.alpha);
    case Theorem::InductiveBasicVariance:
      return inductive_basic_variance(in, opts.alpha);
    case Theorem::InductiveExchangeableK1:
      return inductive_exchangeable_k1(in, opts.alpha, opts.weakened);
    case Theorem::InductiveNearOptimalLambda:
      return inductive_near_optimal_lambda(in, opts.dbar);
    case Theorem::InductiveExchangeableLambda:
      return inductive_exchangeable_lambda(in, opts.dbar);
    case Theorem::RelativeChained: return relative_chained(in, opts.level);
  }
  throw std::logic_error("evaluate_bound: unhandled theorem tag");
}

}  // namespace vcb
