#include "assort/sample.hpp"

#include <cmath>
#include <stdexcept>

#include "assort/rng.hpp"

namespace assort {
namespace {

Utilities mnl_utilities(const std::vector<double>& v, SplitMix64& rng) {
  Utilities u;
  u.outside = gumbel_mean_zero(rng);
  u.product.reserve(v.size());
  for (double vi : v) u.product.push_back(std::log(vi) + gumbel_mean_zero(rng));
  return u;
}

int pick_segment(const LcMnl& m, SplitMix64& rng) {
  const double x = rng.uniform01();
  double cum = 0.0;
  for (int j = 0; j < m.segments(); ++j) {
    cum += m.theta[j];
    if (x < cum) return j;
  }
  return m.segments() - 1;
}

}  // namespace

bool supports_utility_sampling(const ChoiceModel& model) {
  return std::holds_alternative<Mnl>(model) ||
         std::holds_alternative<LcMnl>(model) ||
         std::holds_alternative<SamplerRum>(model);
}

bool supports_sampling(const ChoiceModel& model) {
  return supports_utility_sampling(model) ||
         std::holds_alternative<Rcs>(model);
}

Utilities sample_utilities(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed);
  if (const auto* m = std::get_if<Mnl>(&inst.model))
    return mnl_utilities(m->v, rng);
  if (const auto* m = std::get_if<LcMnl>(&inst.model)) {
    const int j = pick_segment(*m, rng);
    return mnl_utilities(m->v[j], rng);
  }
  if (const auto* m = std::get_if<SamplerRum>(&inst.model)) {
    Utilities u = m->sample(seed);
    if (static_cast<int>(u.product.size()) != m->n)
      throw std::runtime_error("sampler_rum returned the wrong dimension");
    return u;
  }
  throw std::invalid_argument("model kind '" + model_kind(inst.model) +
                              "' cannot sample utilities");
}

int sample_choice(const Instance& inst, std::span<const int> assortment,
                  std::uint64_t seed) {
  if (assortment.empty()) return kNoPurchase;
  if (const auto* m = std::get_if<Rcs>(&inst.model)) {
    SplitMix64 rng(seed);
    // Coins are flipped in product-id order so the draw for a product does
    // not depend on what else is offered.
    int best = kNoPurchase;
    std::vector<int> rank(m->attention.size(), 0);
    for (std::size_t pos = 0; pos < m->preference.size(); ++pos)
      rank[m->preference[pos]] = static_cast<int>(pos);
    for (int p : assortment) {
      const bool noticed = rng.uniform01() < m->attention[p];
      if (noticed && (best == kNoPurchase || rank[p] < rank[best])) best = p;
    }
    return best;
  }
  Utilities u = sample_utilities(inst, seed);
  int best = kNoPurchase;
  double best_u = u.outside;
  for (int p : assortment) {
    // A product ties the no-purchase utility in its favor; ties between
    // products go to the earlier (higher revenue) one.
    if (u.product[p] >= best_u && (best == kNoPurchase || u.product[p] > best_u)) {
      best = p;
      best_u = u.product[p];
    }
  }
  return best;
}

std::vector<char> sample_B(const Instance& inst, std::uint64_t seed) {
  const int n = inst.n();
  std::vector<char> b(n, 0);
  if (const auto* m = std::get_if<Rcs>(&inst.model)) {
    SplitMix64 rng(seed);
    for (int p = 0; p < n; ++p) b[p] = rng.uniform01() < m->attention[p];
    return b;
  }
  Utilities u = sample_utilities(inst, seed);
  for (int p = 0; p < n; ++p) b[p] = u.product[p] >= u.outside;
  return b;
}

}  // namespace assort
