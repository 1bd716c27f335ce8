#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "assort/model.hpp"

namespace assort {

enum class ClairvoyantMethod {
  exact_mnl,
  exact_independent,
  exact_lcmnl,
  exact_markov_fixture,
  monte_carlo,
};

std::string clairvoyant_method_name(ClairvoyantMethod m);

// Expected revenue of a firm that observes each consumer's
// willingness-to-buy vector B and offers the highest-revenue product with
// B_i = 1.
struct ClairvoyantResult {
  double value = 0.0;
  ClairvoyantMethod method = ClairvoyantMethod::monte_carlo;
  double std_error = 0.0;         // Monte Carlo only
  std::vector<double> sale_prob;  // Pr(sale is product i); exact methods
  double no_sale = 0.0;           // Pr(no product acceptable)
};

bool clairvoyant_exact_supported(const ChoiceModel& model);

// Closed forms: sequential no-buy/buy products for the MNL, the
// theta-weighted sum of those for the LC-MNL, and the independent-coin
// product formula for the RCS.
ClairvoyantResult clairvoyant_exact(const Instance& inst);

// Mean of max_i r_i B_i over seeded draws; requires sample_B support.
ClairvoyantResult clairvoyant_mc(const Instance& inst,
                                 std::int64_t samples = 1'000'000,
                                 std::uint64_t seed = 1);

// tau + sum_i omega_i (r_i - tau)^+, an upper bound on E[max_i r_i B_i]
// for any dependence structure with these marginals.
double lai_robbins_bound(std::span<const double> omega,
                         std::span<const double> r, double tau);

// The bound at its minimizer tau = R*_omega, where it equals 2 R*_omega.
double lai_robbins_min(std::span<const double> omega,
                       std::span<const double> r);

// Revenue of offering products one at a time from high to low revenue to a
// persistent satisficing consumer. The estimator is the clairvoyant one:
// such a consumer stops exactly at the first acceptable product.
double sequential_satisficing_revenue(const Instance& inst,
                                      std::int64_t samples,
                                      std::uint64_t seed);

// Consumer-side value of a policy: mean of max(U_0, max_{i offered} U_i).
// The clairvoyant policy offers only the highest-revenue acceptable
// product.
struct SurplusPolicy {
  enum Kind { fixed_assortment, clairvoyant } kind = fixed_assortment;
  std::vector<int> assortment;  // fixed_assortment only
};

double estimate_surplus(const Instance& inst, const SurplusPolicy& policy,
                        std::int64_t samples, std::uint64_t seed);

// Building blocks shared with the two-stage personalization solvers.
double mnl_clairvoyant(std::span<const double> r, std::span<const double> v,
                       std::vector<double>* sale_prob = nullptr,
                       double* no_sale = nullptr);
double mnl_clairvoyant_within(std::span<const double> r,
                              std::span<const double> v,
                              std::span<const int> universe);
double independent_clairvoyant(std::span<const double> r,
                               std::span<const double> omega,
                               std::vector<double>* sale_prob = nullptr,
                               double* no_sale = nullptr);

}  // namespace assort
