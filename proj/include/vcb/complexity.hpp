#pragma once
// Complexity terms consumed by the generalization bounds: the Sauer growth
// cap, Haussler covering numbers and the geometric chaining grid.
//
// All logarithms are natural logs.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vcb {

// How class complexity enters a bound exponent: an explicit value (with the
// confidence term already folded in), the log-cardinality of a finite class,
// or a VC dimension routed through the Sauer growth cap.
struct ComplexitySpec {
  enum class Kind { ExplicitD, LogClassSize, VcDim };

  Kind kind = Kind::ExplicitD;
  double amount = 0.0;   // ExplicitD / LogClassSize payload
  std::int64_t vc = 0;   // VcDim payload

  static ComplexitySpec explicit_d(double d) {
    if (!(d >= 0.0))
      throw std::invalid_argument("complexity: explicit d must be >= 0");
    return {Kind::ExplicitD, d, 0};
  }
  static ComplexitySpec log_class_size(double log_size) {
    if (!(log_size >= 0.0))
      throw std::invalid_argument("complexity: log class size must be >= 0");
    return {Kind::LogClassSize, log_size, 0};
  }
  static ComplexitySpec vc_dim(std::int64_t h) {
    if (h < 1)
      throw std::invalid_argument("complexity: VC dimension must be >= 1");
    return {Kind::VcDim, 0.0, h};
  }
};

// Log of the number of labelings a VC-h class can induce on m points:
// h ln(e m / h), capped by the trivial 2^m labelings (the cap is what a
// fully shattered design attains, and it is the tighter term for m close
// to or below h).
inline double sauer_log_growth(std::int64_t h, std::int64_t m) {
  if (h < 1) throw std::invalid_argument("sauer_log_growth: h must be >= 1");
  if (m < 1) throw std::invalid_argument("sauer_log_growth: m must be >= 1");
  const double shatter_cap = double(m) * std::numbers::ln2;
  if (m < h) return shatter_cap;
  const double growth =
      double(h) * std::log(std::numbers::e * double(m) / double(h));
  return std::min(growth, shatter_cap);
}

// Complexity-plus-confidence exponent d over a design of `design_size`
// points at confidence parameter `epsilon`.
inline double d_term(const ComplexitySpec& spec, std::int64_t design_size,
                     double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("d_term: epsilon must lie in (0,1)");
  if (design_size < 1)
    throw std::invalid_argument("d_term: design size must be >= 1");
  switch (spec.kind) {
    case ComplexitySpec::Kind::ExplicitD:
      return spec.amount;
    case ComplexitySpec::Kind::LogClassSize:
      return spec.amount + std::log(1.0 / epsilon);
    case ComplexitySpec::Kind::VcDim:
      return sauer_log_growth(spec.vc, design_size) + std::log(1.0 / epsilon);
  }
  throw std::logic_error("d_term: unhandled complexity kind");
}

// Log-size of a xi-covering net of a VC-h class: 1 + ln(h+1) + h ln(2e/xi).
inline double haussler_log_cover(std::int64_t h, double xi) {
  if (h < 1)
    throw std::invalid_argument("haussler_log_cover: h must be >= 1");
  if (!(xi > 0.0 && xi <= 1.0))
    throw std::invalid_argument("haussler_log_cover: xi must lie in (0,1]");
  return 1.0 + std::log(double(h) + 1.0) +
         double(h) * std::log(2.0 * std::numbers::e / xi);
}

// Largest integer j with e^j <= n (0 when n < e).  The floor is taken by
// integer comparison against e^j so a float rounding of log(n) cannot move
// the count across a boundary.
inline int chain_level_count(std::int64_t n) {
  if (n < 2)
    throw std::invalid_argument("chain_level_count: n must be >= 2");
  int j = int(std::floor(std::log(double(n))));
  while (std::exp(double(j + 1)) <= double(n)) ++j;
  while (j >= 1 && std::exp(double(j)) > double(n)) --j;
  return j < 0 ? 0 : j;
}

// One resolution level of the chaining grid over a (k+1)n design.
struct ChainLevel {
  int j = 0;            // level index, 1-based
  double xi = 0.0;      // net resolution, floor((k+1)n e^-j) / ((k+1)n)
  double d = 0.0;       // covering complexity exponent at this resolution
  double d_prime = 0.0; // complexity exponent of the net itself
};

// Levels j = 1..floor(ln n) whose resolution still contains at least one
// design point.  Finer-than-available levels are skipped, not errors: the
// chained bound takes the best level among those that exist.  The entropy
// term charges the exact number of levels the prior mass is split over,
// floor(ln n), not its real-valued upper bound.
inline std::vector<ChainLevel> chain_levels(std::int64_t n, std::int64_t k,
                                            std::int64_t h, double epsilon) {
  if (k < 1) throw std::invalid_argument("chain_levels: k must be >= 1");
  if (h < 1) throw std::invalid_argument("chain_levels: h must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("chain_levels: epsilon must lie in (0,1)");
  const int levels = chain_level_count(n);
  const double design = double(k + 1) * double(n);
  const double net_entropy =
      std::log(std::numbers::e * double(levels < 1 ? 1 : levels) *
               double(h + 1));
  const double log_inv_eps = std::log(1.0 / epsilon);

  std::vector<ChainLevel> out;
  out.reserve(std::size_t(levels > 0 ? levels : 0));
  for (int j = 1; j <= levels; ++j) {
    const double cells = std::floor(design * std::exp(double(-j)));
    if (cells < 1.0) continue;
    const double xi = cells / design;
    ChainLevel lvl;
    lvl.j = j;
    lvl.xi = xi;
    lvl.d = double(h) * std::log(2.0 * std::numbers::e * std::numbers::e *
                                 design / (double(h) * xi)) +
            net_entropy + log_inv_eps;
    lvl.d_prime = double(h) * std::log(2.0 * std::numbers::e / xi) +
                  net_entropy + log_inv_eps;
    out.push_back(lvl);
  }
  return out;
}

}  // namespace vcb
