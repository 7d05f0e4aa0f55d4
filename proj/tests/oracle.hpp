#pragma once
// Independent solving route for the bound displays: bisection on the raw
// deviation inequality x - r1 <= rhs(x).  The closed forms in the library
// must agree with these roots; nothing here reuses the library's solved
// expressions, only the shared complexity exponents.

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "vcb/bounds.hpp"
#include "vcb/complexity.hpp"

namespace oracle {

// Largest x >= r1 with x - r1 <= rhs(x).  rhs values outside their real
// domain (NaN) count as zero, which only happens past every crossing.
inline double bisect_largest(const std::function<double(double)>& rhs,
                             double r1) {
  auto gap = [&](double x) {
    const double v = rhs(x);
    return x - r1 - (std::isfinite(v) ? std::max(v, 0.0) : 0.0);
  };
  double lo = r1;
  double hi = std::max(1.0, r1 + 1.0);
  for (int i = 0; i < 80 && gap(hi) <= 0.0; ++i) hi = r1 + (hi - r1) * 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double uncapped_variance(double p) { return p * (1.0 - p); }

// Shadow-sample bound: x - r1 <= sqrt(2 d (r1/k + x) / N).
inline double shadow_basic(const vcb::BoundInput& in) {
  const double d = vcb::d_term(in.complexity, (in.k + 1) * in.n, in.epsilon);
  const double n = double(in.n);
  const double kk = double(in.k);
  return bisect_largest(
      [&](double x) { return std::sqrt(2.0 * d * (in.r1 / kk + x) / n); },
      in.r1);
}

// Pairing bound at k = 1: x - r1 <= sqrt(2 d (r1 + x - 2 r1 x) / N).
inline double pair_variance(const vcb::BoundInput& in) {
  const double d = vcb::d_term(in.complexity, 2 * in.n, in.epsilon);
  const double n = double(in.n);
  return bisect_largest(
      [&](double x) {
        return std::sqrt(2.0 * d * (in.r1 + x - 2.0 * in.r1 * x) / n);
      },
      in.r1);
}

// Capped-variance bound, solved on the p(1-p) branch:
// x - r1 <= sqrt(2 (1+1/k)^2 d p(1-p) / N), p = (r1 + k x)/(k+1).
inline double capped_variance_shadow(const vcb::BoundInput& in) {
  const double d = vcb::d_term(in.complexity, (in.k + 1) * in.n, in.epsilon);
  const double n = double(in.n);
  const double kk = double(in.k);
  const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
  return bisect_largest(
      [&](double x) {
        const double p = (in.r1 + kk * x) / (kk + 1.0);
        return std::sqrt(2.0 * ksq * d * uncapped_variance(p) / n);
      },
      in.r1);
}

// Risk bound in one inflated exponent: x - r1 <= sqrt(2 dp x(1-x) / N).
inline double risk_variance_shape(double r1, double dp, double n) {
  return bisect_largest(
      [&](double x) { return std::sqrt(2.0 * dp * uncapped_variance(x) / n); },
      r1);
}

inline double alpha_inflation(double d, double alpha) {
  return 1.0 - std::log(alpha) / (2.0 * d) +
         alpha / std::sqrt(std::numbers::pi * d);
}

inline double integration_cost(double d, double alpha) {
  return 2.0 * alpha * std::sqrt((d - std::log(alpha)) / std::numbers::pi) +
         alpha * alpha / std::numbers::pi;
}

inline double integrated_risk(const vcb::BoundInput& in, double alpha) {
  const double d = vcb::d_term(in.complexity, (in.k + 1) * in.n, in.epsilon);
  const double kk = double(in.k);
  const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
  const double f = alpha_inflation(d, alpha);
  return risk_variance_shape(in.r1, d * ksq * f * f, double(in.n));
}

// Tight form: x - r1 <= sqrt((2/N)(1+1/k)^2 [(d - ln a) p(1-p) + c x(1-x)]).
inline double integrated_risk_tight(const vcb::BoundInput& in, double alpha) {
  const double d = vcb::d_term(in.complexity, (in.k + 1) * in.n, in.epsilon);
  const double n = double(in.n);
  const double kk = double(in.k);
  const double ksq = (1.0 + 1.0 / kk) * (1.0 + 1.0 / kk);
  const double shifted = d - std::log(alpha);
  const double c = integration_cost(d, alpha);
  return bisect_largest(
      [&](double x) {
        const double p = (in.r1 + kk * x) / (kk + 1.0);
        return std::sqrt(2.0 * ksq *
                         (shifted * uncapped_variance(p) +
                          c * uncapped_variance(x)) /
                         n);
      },
      in.r1);
}

// Basic-variance risk bound: x - r1 <= sqrt(2 dp x / N).
inline double basic_variance_risk(const vcb::BoundInput& in, double alpha) {
  const double d = vcb::d_term(in.complexity, (in.k + 1) * in.n, in.epsilon);
  const double kk = double(in.k);
  const double f = alpha_inflation(d, alpha);
  const double dp = (1.0 + 1.0 / kk) * f * f * d;
  const double n = double(in.n);
  return bisect_largest(
      [&](double x) { return std::sqrt(2.0 * dp * x / n); }, in.r1);
}

// Exchangeable k=1 risk bound, full form:
// x - r1 <= sqrt((2 d'/N)(r1 + x - 2 r1 x) + (4 c/N) x(1-x)).
inline double exchangeable_k1_risk(const vcb::BoundInput& in, double alpha,
                                   bool weakened) {
  const double d = vcb::d_term(in.complexity, 2 * in.n, in.epsilon);
  const double n = double(in.n);
  const double c = integration_cost(d, alpha);
  const double dp = d - std::log(alpha);
  if (weakened) {
    const double dpp = dp + 2.0 * c;
    return bisect_largest(
        [&](double x) {
          return std::sqrt(2.0 * dpp * (in.r1 + x - 2.0 * in.r1 * x) / n);
        },
        in.r1);
  }
  return bisect_largest(
      [&](double x) {
        return std::sqrt(2.0 * dp * (in.r1 + x - 2.0 * in.r1 * x) / n +
                         4.0 * c * uncapped_variance(x) / n);
      },
      in.r1);
}

// Two-sample baseline: x - r <= sqrt(4 d' x / N).
inline double two_sample_baseline(const vcb::BoundInput& in) {
  const double dp = vcb::d_term(in.complexity, 2 * in.n, in.epsilon / 4.0);
  const double n = double(in.n);
  return bisect_largest(
      [&](double x) { return std::sqrt(4.0 * dp * x / n); }, in.r1);
}

// Scaled comparison bound: x - r <= sqrt(2 zeta d (r + x) / N).
inline double previous_pac(const vcb::BoundInput& in, double zeta) {
  const double eps_mod =
      in.epsilon * std::log(zeta) / std::log(2.0 * zeta * double(in.n));
  const double d = vcb::d_term(in.complexity, 2 * in.n, eps_mod);
  const double n = double(in.n);
  return bisect_largest(
      [&](double x) { return std::sqrt(2.0 * zeta * d * (in.r1 + x) / n); },
      in.r1);
}

// One chaining level of the relative bound, solved on the raw display with
// the capped variance.  Matches the quadratic solution whenever the
// variance argument stays below 1/2 at the root.
inline double chained_level(double r1, double k, double xi, double a, double b) {
  return bisect_largest(
      [&](double x) {
        const double p = (r1 + k * x) / (k + 1.0) + xi;
        return a + b * std::sqrt(vcb::capped_variance(p));
      },
      r1);
}

}  // namespace oracle
