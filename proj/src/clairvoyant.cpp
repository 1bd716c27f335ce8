#include "assort/clairvoyant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "assort/rng.hpp"
#include "assort/sample.hpp"
#include "assort/solver.hpp"

namespace assort {

std::string clairvoyant_method_name(ClairvoyantMethod m) {
  switch (m) {
    case ClairvoyantMethod::exact_mnl: return "exact-mnl";
    case ClairvoyantMethod::exact_independent: return "exact-independent";
    case ClairvoyantMethod::exact_lcmnl: return "exact-lcmnl";
    case ClairvoyantMethod::exact_markov_fixture:
      return "exact-markov-chain-fixture";
    case ClairvoyantMethod::monte_carlo: return "monte-carlo";
  }
  return "?";
}

double mnl_clairvoyant(std::span<const double> r, std::span<const double> v,
                       std::vector<double>* sale_prob, double* no_sale) {
  // Walk products from high to low revenue. The chance that the sale is
  // product i is the chance nobody in the more expensive prefix was
  // acceptable times the chance i wins against the no-purchase utility
  // inside its own prefix.
  double value = 0.0;
  double prefix_v = 0.0;
  if (sale_prob) sale_prob->assign(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double none_before = 1.0 / (1.0 + prefix_v);
    prefix_v += v[i];
    const double pick = none_before * v[i] / (1.0 + prefix_v);
    value += r[i] * pick;
    if (sale_prob) (*sale_prob)[i] = pick;
  }
  if (no_sale) *no_sale = 1.0 / (1.0 + prefix_v);
  return value;
}

double mnl_clairvoyant_within(std::span<const double> r,
                              std::span<const double> v,
                              std::span<const int> universe) {
  double value = 0.0;
  double prefix_v = 0.0;
  for (int p : universe) {
    const double none_before = 1.0 / (1.0 + prefix_v);
    prefix_v += v[p];
    value += r[p] * none_before * v[p] / (1.0 + prefix_v);
  }
  return value;
}

double independent_clairvoyant(std::span<const double> r,
                               std::span<const double> omega,
                               std::vector<double>* sale_prob,
                               double* no_sale) {
  double value = 0.0;
  double miss_all = 1.0;
  if (sale_prob) sale_prob->assign(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double pick = omega[i] * miss_all;
    value += r[i] * pick;
    if (sale_prob) (*sale_prob)[i] = pick;
    miss_all *= 1.0 - omega[i];
  }
  if (no_sale) *no_sale = miss_all;
  return value;
}

bool clairvoyant_exact_supported(const ChoiceModel& model) {
  return std::holds_alternative<Mnl>(model) ||
         std::holds_alternative<LcMnl>(model) ||
         std::holds_alternative<Rcs>(model);
}

ClairvoyantResult clairvoyant_exact(const Instance& inst) {
  ClairvoyantResult out;
  if (const auto* m = std::get_if<Mnl>(&inst.model)) {
    out.method = ClairvoyantMethod::exact_mnl;
    out.value = mnl_clairvoyant(inst.revenues, m->v, &out.sale_prob,
                                &out.no_sale);
    return out;
  }
  if (const auto* m = std::get_if<LcMnl>(&inst.model)) {
    out.method = ClairvoyantMethod::exact_lcmnl;
    out.sale_prob.assign(inst.n(), 0.0);
    std::vector<double> seg_pick;
    for (int j = 0; j < m->segments(); ++j) {
      double seg_none = 0.0;
      out.value += m->theta[j] * mnl_clairvoyant(inst.revenues, m->v[j],
                                                 &seg_pick, &seg_none);
      for (int p = 0; p < inst.n(); ++p)
        out.sale_prob[p] += m->theta[j] * seg_pick[p];
      out.no_sale += m->theta[j] * seg_none;
    }
    return out;
  }
  if (const auto* m = std::get_if<Rcs>(&inst.model)) {
    out.method = ClairvoyantMethod::exact_independent;
    out.value = independent_clairvoyant(inst.revenues, m->attention,
                                        &out.sale_prob, &out.no_sale);
    return out;
  }
  throw std::invalid_argument("clairvoyant revenue has no closed form for '" +
                              model_kind(inst.model) + "'");
}

ClairvoyantResult clairvoyant_mc(const Instance& inst, std::int64_t samples,
                                 std::uint64_t seed) {
  if (!supports_sampling(inst.model))
    throw std::invalid_argument("model kind '" + model_kind(inst.model) +
                                "' cannot be sampled");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    std::vector<char> b =
        sample_B(inst, mix_seed({seed, static_cast<std::uint64_t>(k)}));
    double x = 0.0;
    for (int p = 0; p < inst.n(); ++p) {
      if (b[p]) {
        x = inst.revenues[p];  // first acceptable product is the dearest
        break;
      }
    }
    sum += x;
    sumsq += x * x;
  }
  ClairvoyantResult out;
  out.method = ClairvoyantMethod::monte_carlo;
  const double n = static_cast<double>(samples);
  out.value = sum / n;
  const double var =
      std::max(0.0, (sumsq - n * out.value * out.value) / (n - 1.0));
  out.std_error = std::sqrt(var / n);
  return out;
}

double lai_robbins_bound(std::span<const double> omega,
                         std::span<const double> r, double tau) {
  double bound = tau;
  for (std::size_t i = 0; i < r.size(); ++i)
    bound += omega[i] * std::max(0.0, r[i] - tau);
  return bound;
}

double lai_robbins_min(std::span<const double> omega,
                       std::span<const double> r) {
  const double root = mnl_optimal(r, omega).value;
  return lai_robbins_bound(omega, r, root);
}

double sequential_satisficing_revenue(const Instance& inst,
                                      std::int64_t samples,
                                      std::uint64_t seed) {
  // A persistent satisficing consumer shown products from high to low
  // revenue buys exactly the clairvoyant's pick, so the estimator is
  // shared deliberately.
  return clairvoyant_mc(inst, samples, seed).value;
}

double estimate_surplus(const Instance& inst, const SurplusPolicy& policy,
                        std::int64_t samples, std::uint64_t seed) {
  if (!supports_utility_sampling(inst.model))
    throw std::invalid_argument("model kind '" + model_kind(inst.model) +
                                "' cannot sample utilities");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  double sum = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    Utilities u =
        sample_utilities(inst, mix_seed({seed, static_cast<std::uint64_t>(k)}));
    double best = u.outside;
    if (policy.kind == SurplusPolicy::fixed_assortment) {
      for (int p : policy.assortment) best = std::max(best, u.product[p]);
    } else {
      for (int p = 0; p < inst.n(); ++p) {
        if (u.product[p] >= u.outside) {
          best = std::max(best, u.product[p]);
          break;  // only the dearest acceptable product is offered
        }
      }
    }
    sum += best;
  }
  return sum / static_cast<double>(samples);
}

}  // namespace assort
