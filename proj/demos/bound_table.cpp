// Prints every bound at one representative configuration, first at a fixed
// shadow multiplier and then at the scanned optimum, to show how much the
// variance improvements and the shadow-sample scan buy.

#include <cstdio>

#include "vcb/bounds.hpp"
#include "vcb/optimizer.hpp"

int main() {
  using namespace vcb;
  const BoundInput base{1000, 1, 0.01, 0.2, ComplexitySpec::vc_dim(10)};

  std::printf("N=%lld  h=%lld  epsilon=%g  r1=%g\n\n", (long long)base.n,
              (long long)base.complexity.vc, base.epsilon, base.r1);
  std::printf("%-32s %10s %14s %8s\n", "bound", "at k=1", "best over k",
              "best k");

  for (Theorem t : all_theorems()) {
    if (t == Theorem::PreviousPac) continue;  // needs its own zeta scale
    double at_k1 = 0.0;
    bool have_k1 = true;
    try {
      at_k1 = evaluate_bound(t, base).value;
    } catch (const std::exception&) {
      have_k1 = false;
    }
    try {
      const Optimum best = optimize_k(t, base, 100);
      if (have_k1)
        std::printf("%-32s %10.4f %14.4f %8lld\n", theorem_name(t), at_k1,
                    best.best_value, (long long)best.argmin);
      else
        std::printf("%-32s %10s %14.4f %8lld\n", theorem_name(t), "-",
                    best.best_value, (long long)best.argmin);
    } catch (const std::exception& e) {
      std::printf("%-32s %10s %14s   (%s)\n", theorem_name(t),
                  have_k1 ? "" : "-", "-", e.what());
    }
  }
  return 0;
}
