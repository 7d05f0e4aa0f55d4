#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "vcb/bounds.hpp"

using Catch::Approx;
using namespace vcb;

namespace {

const BoundInput kBase{1000, 1, 0.01, 0.2, ComplexitySpec::vc_dim(10)};
const BoundInput kLarge{1000000, 30, 0.005, 0.2, ComplexitySpec::vc_dim(10)};

BoundInput with_k(BoundInput in, std::int64_t k) {
  in.k = k;
  return in;
}

}  // namespace

TEST_CASE("capped variance endpoints and concavity") {
  CHECK(capped_variance(0.0) == 0.0);
  CHECK(capped_variance(0.5) == 0.25);
  CHECK(capped_variance(1.0) == 0.25);
  for (int i = 0; i <= 1000; ++i)
    for (int j = i; j <= 1000; j += 7) {
      const double p = i / 1000.0;
      const double q = j / 1000.0;
      CHECK(capped_variance(0.5 * (p + q)) >=
            0.5 * (capped_variance(p) + capped_variance(q)) - 1e-12);
    }
}

TEST_CASE("bernstein_g value, slope and monotonicity") {
  CHECK(bernstein_g(0.0) == 0.5);
  CHECK(std::fabs(bernstein_g(1e-8) - 0.5) < 1e-7);
  // Taylor behaviour g(x) ~ 1/2 + x/6 near zero
  for (double x : {-1e-4, -1e-6, 1e-6, 1e-4})
    CHECK(std::fabs(bernstein_g(x) - 0.5 - x / 6.0) <= x * x);
  // series path agrees with the direct ratio where both are stable
  for (double x : {0.1249, -0.1249, 0.08, -0.08}) {
    const double direct = (std::expm1(x) - x) / (x * x);
    CHECK(bernstein_g(x) == Approx(direct).epsilon(1e-12));
  }
  double prev = bernstein_g(-10.0);
  for (double x = -9.99; x <= 10.0; x += 0.01) {
    const double v = bernstein_g(x);
    CHECK(v > prev);
    prev = v;
  }
  // direct ratio at a moderate argument
  CHECK(bernstein_g(2.0) ==
        Approx((std::exp(2.0) - 3.0) / 4.0).epsilon(1e-14));
}

TEST_CASE("solve_sqrt_inequality basics") {
  CHECK(solve_sqrt_inequality(0.37, 0.0, 0.0) == 0.37);
  // the shadow bound is exactly this solve
  const BoundInput in = with_k(kBase, 4);
  const double d = d_term(in.complexity, 5000, in.epsilon);
  const double n = double(in.n);
  CHECK(transductive_basic(in).value ==
        Approx(solve_sqrt_inequality(in.r1, 2.0 * d * in.r1 / (4.0 * n),
                                     2.0 * d / n))
            .epsilon(1e-12));
  CHECK_THROWS_AS(solve_sqrt_inequality(-0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_sqrt_inequality(0.2, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("two-sample baseline") {
  const BoundResult res = vapnik_bound(kBase);
  CHECK(res.value > 0.610);
  CHECK(res.value == Approx(0.6103638749).epsilon(1e-9));
  CHECK_FALSE(res.significant);

  // r1 = 0 collapses to 4 d'/N
  BoundInput zero = kBase;
  zero.r1 = 0.0;
  const double dp = d_term(zero.complexity, 2000, zero.epsilon / 4.0);
  CHECK(vapnik_bound(zero).value ==
        Approx(4.0 * dp / 1000.0).epsilon(1e-12));
}

TEST_CASE("scaled comparison bound") {
  BoundInput zero = kBase;
  zero.r1 = 0.0;
  const double zeta = 2.0;
  const double eps_mod = zero.epsilon * std::log(zeta) / std::log(2.0 * zeta * 1000.0);
  const double d = d_term(zero.complexity, 2000, eps_mod);
  CHECK(previous_pac_bound(zero, zeta).value ==
        Approx(2.0 * zeta * d / 1000.0).epsilon(1e-12));
  CHECK_THROWS_AS(previous_pac_bound(kBase, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(previous_pac_bound(kBase, 0.5), std::invalid_argument);
  // increasing in zeta once the scale dominates
  double prev = previous_pac_bound(kBase, 3.0).value;
  for (double z = 3.5; z <= 10.0; z += 0.5) {
    const double v = previous_pac_bound(kBase, z).value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("shadow bound reproduces the reference values") {
  CHECK(transductive_basic(with_k(kBase, 4)).value ==
        Approx(0.4872).margin(1e-3));
  CHECK(transductive_basic(with_k(kBase, 1)).value ==
        Approx(0.5098).margin(1e-3));
  // frozen against the bisection oracle
  CHECK(transductive_basic(with_k(kBase, 4)).value ==
        Approx(0.4871470214254546).epsilon(1e-12));
  BoundInput zero = with_k(kBase, 3);
  zero.r1 = 0.0;
  const double d = d_term(zero.complexity, 4000, zero.epsilon);
  CHECK(transductive_basic(zero).value == Approx(2.0 * d / 1000.0).epsilon(1e-12));
}

TEST_CASE("pair-variance bound at k=1") {
  CHECK(transductive_improved_k1(kBase).value == Approx(0.453).margin(1e-3));
  CHECK(transductive_improved_k1(kBase).value ==
        Approx(0.4524517708).epsilon(1e-9));
  CHECK_THROWS_AS(transductive_improved_k1(with_k(kBase, 2)),
                  std::invalid_argument);

  const double d = d_term(kBase.complexity, 2000, kBase.epsilon);
  BoundInput zero = kBase;
  zero.r1 = 0.0;
  CHECK(transductive_improved_k1(zero).value ==
        Approx(2.0 * d / 1000.0).epsilon(1e-12));
  BoundInput half = kBase;
  half.r1 = 0.5;
  CHECK(transductive_improved_k1(half).value ==
        Approx(0.5 + std::sqrt(d / 1000.0)).epsilon(1e-12));
}

TEST_CASE("capped-variance bound, general k") {
  CHECK(transductive_improved(with_k(kBase, 16)).value ==
        Approx(0.4203).margin(1e-3));
  CHECK(transductive_improved(with_k(kBase, 16)).value ==
        Approx(0.4202334062).epsilon(1e-9));
  const BoundResult big = transductive_improved(kLarge);
  CHECK(big.value > 0.2074);
  CHECK(big.value < 0.2077);

  BoundInput zero = with_k(kBase, 5);
  zero.r1 = 0.0;
  const double d = d_term(zero.complexity, 6000, zero.epsilon);
  const double s = d / 1000.0;
  CHECK(transductive_improved(zero).value ==
        Approx((1.0 + 1.0 / 5.0) * 2.0 * s / (1.0 + 2.0 * s)).epsilon(1e-12));

  // validity flag tracks the side conditions
  CHECK(transductive_improved(with_k(kBase, 16)).valid);
  BoundInput bad = with_k(kBase, 16);
  bad.r1 = 0.45;
  CHECK_FALSE(transductive_improved(bad).valid);
}

TEST_CASE("integrated risk bound") {
  const BoundResult res = inductive_integrated(with_k(kBase, 19));
  CHECK(res.value == Approx(0.4257).margin(1e-3));
  CHECK(res.value == Approx(0.4256946871).epsilon(1e-9));

  // the four rounded display constants approximate the exact bound
  const double pref = 0.828, add = 0.105, lin = 0.209, quad = 0.011;
  for (double r1 : {0.05, 0.1, 0.3}) {
    BoundInput in = with_k(kBase, 19);
    in.r1 = r1;
    const double display =
        pref * (r1 + add + std::sqrt(lin * (1.0 - r1) * r1 + quad));
    CHECK(inductive_integrated(in).value == Approx(display).margin(2e-3));
  }

  // alpha = 1 removes the log term from the inflation factor
  BoundInput in = with_k(kBase, 19);
  const double d = d_term(in.complexity, 20000, in.epsilon);
  const BoundResult unit = inductive_integrated(in, 1.0);
  const double factor = 1.0 + 1.0 / std::sqrt(std::numbers::pi * d);
  CHECK(unit.terms.at("d_prime") ==
        Approx(d * std::pow((20.0 / 19.0) * factor, 2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(inductive_integrated(in, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(inductive_integrated(in, 0.0), std::invalid_argument);
}

TEST_CASE("integrated risk bound, tight form") {
  const BoundResult tight = inductive_integrated_tight(with_k(kBase, 19));
  CHECK(tight.value == Approx(0.4248).margin(1e-3));
  CHECK(tight.value == Approx(0.4247815225).epsilon(1e-9));
  const BoundResult loose = inductive_integrated(with_k(kBase, 19));
  CHECK(tight.value <= loose.value + 1e-9);

  // r1 = 0 with alpha = 1: the linear and quadratic exponents coincide
  BoundInput zero = with_k(kBase, 7);
  zero.r1 = 0.0;
  const BoundResult res = inductive_integrated_tight(zero, 1.0);
  CHECK(res.terms.at("d2") == Approx(res.terms.at("d4")).epsilon(1e-12));
}

TEST_CASE("basic-variance risk bound") {
  const BoundResult res = inductive_basic_variance(with_k(kBase, 9));
  CHECK(res.value == Approx(0.516).margin(2e-3));
  CHECK(res.value == Approx(0.5159124283).epsilon(1e-9));
  CHECK_FALSE(res.significant);
  // dominated by the capped-variance version at the same instance
  CHECK(res.value >= inductive_integrated(with_k(kBase, 9)).value);

  BoundInput zero = with_k(kBase, 9);
  zero.r1 = 0.0;
  const BoundResult z = inductive_basic_variance(zero);
  CHECK(z.value == Approx(2.0 * z.terms.at("d_prime") / 1000.0).epsilon(1e-12));
}

TEST_CASE("exchangeable risk bound at k=1") {
  const BoundResult full = inductive_exchangeable_k1(kBase);
  CHECK(full.value == Approx(0.460).margin(1e-3));
  CHECK(full.value == Approx(0.4597203918).epsilon(1e-9));
  CHECK_THROWS_AS(inductive_exchangeable_k1(with_k(kBase, 2)),
                  std::invalid_argument);

  // alpha = 1/sqrt(d) keeps the integration cost below 3/2
  for (double dval : {1.0, 2.0, 5.0, 20.0, 100.0, 1000.0}) {
    BoundInput in{1000, 1, 0.01, 0.2, ComplexitySpec::explicit_d(dval)};
    const BoundResult res = inductive_exchangeable_k1(in, 1.0 / std::sqrt(dval));
    CHECK(res.terms.at("c") <= 1.5);
  }

  // the weakened form never beats the full form
  for (double r1 : {0.0, 0.1, 0.2, 0.35, 0.45}) {
    for (double eps : {0.001, 0.01, 0.1}) {
      BoundInput in{500, 1, eps, r1, ComplexitySpec::vc_dim(5)};
      const double v_full = inductive_exchangeable_k1(in).value;
      const double v_weak = inductive_exchangeable_k1(in, {}, true).value;
      CHECK(v_weak >= v_full - 1e-9);
    }
  }
}

TEST_CASE("near-optimal scale risk bound") {
  const BoundResult res = inductive_near_optimal_lambda(with_k(kBase, 18));
  CHECK(res.value == Approx(0.4213).margin(1e-3));
  CHECK(res.value == Approx(0.4212465489).epsilon(1e-9));
  // tightest of the risk bounds at this instance
  CHECK(res.value < inductive_integrated(with_k(kBase, 18)).value);
  CHECK(res.value < inductive_integrated(with_k(kBase, 19)).value);

  // dbar = d collapses the exponent to (1 + 1/k)^2 d
  BoundInput in = with_k(kBase, 6);
  const double d = d_term(in.complexity, 7000, in.epsilon);
  const BoundResult explicit_sym = inductive_near_optimal_lambda(in, d);
  CHECK(explicit_sym.terms.at("d_prime") ==
        Approx(std::pow(7.0 / 6.0, 2.0) * d).epsilon(1e-12));
  CHECK_THROWS_AS(inductive_near_optimal_lambda(in, -3.0),
                  std::invalid_argument);
}

TEST_CASE("exchangeable scale risk bound") {
  const BoundResult res = inductive_exchangeable_lambda(kBase);
  CHECK(res.value == Approx(0.445).margin(1e-3));
  CHECK(res.value == Approx(0.4447795509).epsilon(1e-9));
  CHECK_THROWS_AS(inductive_exchangeable_lambda(with_k(kBase, 2)),
                  std::invalid_argument);

  // dbar = d gives d' = 2d (d over the paired design)
  const double d2n = d_term(kBase.complexity, 2000, kBase.epsilon);
  const BoundResult sym = inductive_exchangeable_lambda(kBase, d2n);
  CHECK(sym.terms.at("d_prime") == Approx(2.0 * d2n).epsilon(1e-12));

  // r1 = 0 under the capped variant
  BoundInput zero = kBase;
  zero.r1 = 0.0;
  const double dn = d_term(kBase.complexity, 1000, kBase.epsilon);
  const double s = 2.0 * dn / 1000.0;
  CHECK(inductive_exchangeable_lambda(zero).value ==
        Approx(2.0 * s / (1.0 + 2.0 * s)).epsilon(1e-12));
}

TEST_CASE("chained relative bound") {
  BoundInput in = kLarge;
  in.k = 257;
  const BoundResult at7 = relative_chained(in, 7);
  CHECK(at7.value < 0.20672);
  CHECK(at7.value > 0.20);
  CHECK(at7.value == Approx(0.2067118419).epsilon(1e-9));
  CHECK(at7.confidence == Approx(1.0 - 2.0 * 0.005).epsilon(1e-15));
  CHECK(at7.terms.at("j") == 7.0);

  const BoundResult auto30 = relative_chained(kLarge);
  CHECK(auto30.value < 0.2070);
  BoundInput big = kLarge;
  big.k = 10000;
  CHECK(relative_chained(big).value < 0.2068);

  // requires a VC-dimension complexity
  BoundInput wrong = in;
  wrong.complexity = ComplexitySpec::log_class_size(5.0);
  CHECK_THROWS_AS(relative_chained(wrong), std::invalid_argument);
  // unavailable level is a diagnosed error
  CHECK_THROWS_AS(relative_chained(in, 99), std::invalid_argument);
  // no level exists below N = 3
  BoundInput tiny{2, 1, 0.1, 0.0, ComplexitySpec::vc_dim(1)};
  CHECK_THROWS_AS(relative_chained(tiny), std::invalid_argument);
}

TEST_CASE("every bound dominates the empirical error") {
  for (Theorem t : all_theorems()) {
    for (double r1 : {0.0, 0.05, 0.2, 0.45, 0.7, 1.0}) {
      for (std::int64_t k : {1LL, 3LL, 20LL}) {
        if ((t == Theorem::TransductiveImprovedK1 ||
             t == Theorem::InductiveExchangeableK1 ||
             t == Theorem::InductiveExchangeableLambda) &&
            k != 1)
          continue;
        BoundInput in{2000, k, 0.05, r1, ComplexitySpec::vc_dim(4)};
        BoundResult res;
        try {
          res = evaluate_bound(t, in);
        } catch (const std::invalid_argument&) {
          continue;  // level certifies nothing at this instance
        }
        CHECK(res.value >= r1 - 1e-12);
        CHECK(res.significant == (res.value < 0.5));
      }
    }
  }
}

TEST_CASE("off-grid empirical error is flagged") {
  BoundInput in = kBase;
  CHECK(transductive_basic(in).r1_on_grid);
  in.r1 = 0.2001;  // 200.1 errors out of 1000 is not a count
  CHECK_FALSE(transductive_basic(in).r1_on_grid);
  in.r1 = 123.0 / 1000.0;
  CHECK(transductive_basic(in).r1_on_grid);
}

TEST_CASE("input validation names the failing field") {
  BoundInput in = kBase;
  in.epsilon = 1.5;
  CHECK_THROWS_WITH(transductive_basic(in),
                    Catch::Matchers::ContainsSubstring("epsilon"));
  in = kBase;
  in.r1 = -0.2;
  CHECK_THROWS_WITH(transductive_basic(in),
                    Catch::Matchers::ContainsSubstring("r1"));
  in = kBase;
  in.k = 0;
  CHECK_THROWS_WITH(transductive_basic(in),
                    Catch::Matchers::ContainsSubstring("k"));
}
