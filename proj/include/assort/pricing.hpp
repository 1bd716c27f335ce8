#pragma once

namespace assort {

// Uniform-price MNL pricing versus a price-setting clairvoyant, as a
// function of the total attraction V = V(N) at zero prices.
struct PricingResult {
  double p_star = 0.0;         // root of (p - 1) e^p = V
  double r_star = 0.0;         // p_star - 1
  double r_clairvoyant = 0.0;  // ln(1 + V)
  double ratio = 0.0;          // r_clairvoyant / r_star, in (1, e]
};

PricingResult mnl_pricing(double V);

// Single product with U_0 = 1 and Pr(U > p) = min(1, 1/p) on (0, 1 + a]:
// the clairvoyant extracts 1 + ln(1 + a) while any fixed price earns 1, so
// the ratio grows without bound in a.
struct UnboundedPricingExample {
  double r_clairvoyant = 0.0;
  double r_star = 1.0;
  double ratio = 0.0;
};

UnboundedPricingExample unbounded_example(double a);

}  // namespace assort
