#include "assort/pricing.hpp"

#include <cmath>
#include <stdexcept>

namespace assort {

PricingResult mnl_pricing(double V) {
  if (!(V > 0.0)) throw std::invalid_argument("total attraction must be > 0");

  // (p - 1) e^p is increasing on [1, inf); at p = 2 + ln(1 + V) the left
  // side already exceeds V, so the root is bracketed.
  auto excess = [V](double p) { return (p - 1.0) * std::exp(p) - V; };
  double lo = 1.0;
  double hi = 2.0 + std::log1p(V);
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  PricingResult out;
  out.p_star = 0.5 * (lo + hi);
  out.r_star = out.p_star - 1.0;
  out.r_clairvoyant = std::log1p(V);
  out.ratio = out.r_clairvoyant / out.r_star;
  if (std::abs(excess(out.p_star)) > 1e-9 * std::max(1.0, V))
    throw std::logic_error("uniform-price fixed point did not converge");
  return out;
}

UnboundedPricingExample unbounded_example(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("tail length must be > 0");
  UnboundedPricingExample out;
  out.r_clairvoyant = 1.0 + std::log1p(a);
  out.r_star = 1.0;
  out.ratio = out.r_clairvoyant;
  return out;
}

}  // namespace assort
