#pragma once
// Exhaustive searches over the free parameters of the bounds: the shadow
// multiplier k, the integration trade-off alpha, and the chaining level.
// Sweeps are plain integer/grid scans; the bound-vs-parameter curves are
// cheap to evaluate and the scans are exact and deterministic.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcb/bounds.hpp"

namespace vcb {

// One-dimensional sweep request, as issued by the command line layer.
struct SweepSpec {
  enum class Parameter { K, Alpha, J, R1 };
  Parameter parameter = Parameter::K;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
  Theorem theorem = Theorem::TransductiveBasic;
};

struct Optimum {
  double best_value = std::numeric_limits<double>::infinity();
  double argmin = 0.0;          // smallest parameter attaining best_value
  std::vector<double> plateau;  // parameters within tolerance of best_value
};

struct OptimumKJ {
  double best_value = std::numeric_limits<double>::infinity();
  std::int64_t k = 0;
  int j = 0;
};

namespace detail {

// Scan a parameter grid, tolerate per-point evaluation errors, and fail
// only when nothing evaluates.  Ties go to the earliest grid point.
template <typename Values, typename Eval>
Optimum scan_minimum(const Values& values, Eval&& eval, double plateau_tol) {
  Optimum opt;
  std::vector<std::pair<double, double>> evaluated;  // (parameter, value)
  std::string first_error;
  for (double v : values) {
    try {
      evaluated.emplace_back(v, eval(v));
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (evaluated.empty())
    throw std::invalid_argument("sweep: every point failed to evaluate (" +
                                first_error + ")");
  for (const auto& [param, value] : evaluated) {
    if (value < opt.best_value) {
      opt.best_value = value;
      opt.argmin = param;
    }
  }
  for (const auto& [param, value] : evaluated)
    if (value <= opt.best_value + plateau_tol) opt.plateau.push_back(param);
  return opt;
}

}  // namespace detail

// Exhaustive integer scan of the shadow multiplier k = 1..k_max.
inline Optimum optimize_k(Theorem t, const BoundInput& base, std::int64_t k_max,
                          const BoundOptions& opts = {},
                          double plateau_tol = 1e-6) {
  if (k_max < 1) throw std::invalid_argument("optimize_k: k_max must be >= 1");
  std::vector<double> ks;
  ks.reserve(std::size_t(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) ks.push_back(double(k));
  return detail::scan_minimum(
      ks,
      [&](double k) {
        BoundInput in = base;
        in.k = std::int64_t(k);
        return evaluate_bound(t, in, opts).value;
      },
      plateau_tol);
}

// Closed-form seed for the shadow multiplier: round(2 ln(e N / h)), at
// least 1.  Within a few percent of the scanned optimum in practice.
inline std::int64_t heuristic_k(std::int64_t n, std::int64_t h) {
  if (h < 1) throw std::invalid_argument("heuristic_k: h must be >= 1");
  if (n < h) throw std::invalid_argument("heuristic_k: requires n >= h");
  const std::int64_t k =
      std::llround(2.0 * std::log(std::numbers::e * double(n) / double(h)));
  return k < 1 ? 1 : k;
}

inline std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  const double lo = std::log(1e-3);
  const double hi = std::log(10.0);
  for (int i = 0; i < 40; ++i)
    grid.push_back(std::exp(lo + (hi - lo) * double(i) / 39.0));
  return grid;
}

// Scan alpha over the grid plus the three closed-form choices
// { 0.5 sqrt(pi/d), 1/sqrt(d), 1 }.
inline Optimum optimize_alpha(Theorem t, const BoundInput& in,
                              std::vector<double> grid = {},
                              const BoundOptions& opts = {},
                              double plateau_tol = 1e-6) {
  if (t != Theorem::InductiveIntegrated &&
      t != Theorem::InductiveIntegratedTight &&
      t != Theorem::InductiveBasicVariance &&
      t != Theorem::InductiveExchangeableK1)
    throw std::invalid_argument("optimize_alpha: theorem has no alpha");
  if (grid.empty()) grid = default_alpha_grid();
  const std::int64_t design =
      t == Theorem::InductiveExchangeableK1 ? 2 * in.n : (in.k + 1) * in.n;
  const double d = d_term(in.complexity, design, in.epsilon);
  grid.push_back(0.5 * std::sqrt(std::numbers::pi / d));
  grid.push_back(1.0 / std::sqrt(d));
  grid.push_back(1.0);
  return detail::scan_minimum(
      grid,
      [&](double a) {
        BoundOptions o = opts;
        o.alpha = a;
        return evaluate_bound(t, in, o).value;
      },
      plateau_tol);
}

// Joint scan of (k, chaining level) for the chained relative bound.
inline OptimumKJ optimize_kj(const BoundInput& base, std::int64_t k_max) {
  if (base.complexity.kind != ComplexitySpec::Kind::VcDim)
    throw std::invalid_argument("optimize_kj: complexity must be a VC dimension");
  if (k_max < 1) throw std::invalid_argument("optimize_kj: k_max must be >= 1");
  OptimumKJ opt;
  bool found = false;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const ChainedEvaluator eval(base.n, k, base.complexity.vc, base.epsilon);
    const std::optional<ChainedEvaluator::Best> best = eval.best(base.r1);
    if (!best) continue;
    if (!found || best->value < opt.best_value) {
      found = true;
      opt.best_value = best->value;
      opt.k = k;
      opt.j = eval.levels()[best->index].j;
    }
  }
  if (!found)
    throw std::invalid_argument(
        "optimize_kj: no (k, level) pair certifies a bound");
  return opt;
}

}  // namespace vcb
