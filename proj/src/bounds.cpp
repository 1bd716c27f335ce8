#include "assort/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace assort {
namespace {

BoundValue from_mnl(const MnlSolveResult& res) {
  return BoundValue{res.value, res.assortment};
}

}  // namespace

BoundChain bound_chain(const Instance& inst, bool with_exact,
                       int brute_limit) {
  BoundChain chain;
  chain.vectors = derive_vectors(inst);
  const auto& dv = chain.vectors;
  chain.r_lambda = from_mnl(mnl_optimal(inst.revenues, dv.lambda));
  chain.r_a = from_mnl(mnl_optimal(inst.revenues, dv.a));
  chain.r_b = from_mnl(mnl_optimal(inst.revenues, dv.b));

  MnlSolveResult omega = mnl_optimal(inst.revenues, dv.omega);
  chain.r_omega_over_lambda0 =
      BoundValue{omega.value / dv.lambda0, omega.assortment};

  SolveResult ro = revenue_ordered(inst);
  chain.r_o = BoundValue{ro.revenue, ro.assortment};

  if (with_exact && inst.n() <= brute_limit) {
    SolveResult star = brute_force_taop(inst, brute_limit);
    chain.r_star = BoundValue{star.revenue, star.assortment};
  }
  return chain;
}

double subset_upper_bound(const Instance& inst,
                          std::span<const int> assortment) {
  DerivedVectors dv = derive_vectors(inst);
  return mnl_optimal_within(inst.revenues, dv.b, assortment).value;
}

ConstrainedBounds constrained_bounds(const Instance& inst, int k) {
  if (k < 0) throw std::invalid_argument("cardinality bound must be >= 0");
  DerivedVectors dv = derive_vectors(inst);
  ConstraintOracle oracle = cardinality_oracle(inst.n(), k);
  MnlSolveResult low = mnl_constrained(inst.revenues, dv.a, oracle);
  MnlSolveResult high = mnl_constrained(inst.revenues, dv.b, oracle);
  ConstrainedBounds out;
  out.r_k_a = low.value;
  out.r_k_b = high.value;
  out.guarantee = low.value > 0.0 ? high.value / low.value : 1.0;
  out.s_k_a = std::move(low.assortment);
  out.s_k_b = std::move(high.assortment);
  return out;
}

HeuristicReport heuristic_suite(const Instance& inst, int k, bool with_exact,
                                int brute_limit) {
  if (k < 1) throw std::invalid_argument("heuristic_suite needs k >= 1");
  DerivedVectors dv = derive_vectors(inst);
  ConstraintOracle oracle = cardinality_oracle(inst.n(), k);

  auto solve_as = [&](const std::vector<double>& attraction) {
    MnlSolveResult res = mnl_constrained(inst.revenues, attraction, oracle);
    HeuristicValue h;
    h.revenue = expected_revenue(inst, res.assortment);  // true model
    h.assortment = std::move(res.assortment);
    return h;
  };

  HeuristicReport report;
  report.by_lambda = solve_as(dv.lambda);
  report.by_a = solve_as(dv.a);
  report.by_omega = solve_as(dv.omega);
  report.by_b = solve_as(dv.b);
  report.max_h =
      std::max({report.by_lambda.revenue, report.by_a.revenue,
                report.by_omega.revenue, report.by_b.revenue});

  if (const auto* lc = std::get_if<LcMnl>(&inst.model)) {
    std::vector<double> mixture(inst.n(), 0.0);
    for (int j = 0; j < lc->segments(); ++j)
      for (int p = 0; p < inst.n(); ++p)
        mixture[p] += lc->theta[j] * lc->v[j][p];
    MnlSolveResult base = mnl_constrained(inst.revenues, mixture, oracle);
    report.baseline = expected_revenue(inst, base.assortment);
  }

  if (with_exact && inst.n() <= brute_limit) {
    SolveResult exact = brute_force_constrained(
        inst,
        [k](std::span<const int> s) { return static_cast<int>(s.size()) <= k; },
        brute_limit);
    report.optimum = exact.revenue;
    if (report.baseline && *report.optimum - *report.baseline > 1e-9)
      report.cop =
          (report.max_h - *report.baseline) / (*report.optimum - *report.baseline);
  }

  report.bounds = constrained_bounds(inst, k);
  return report;
}

}  // namespace assort
