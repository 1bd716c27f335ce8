#include "assort/personalization.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "assort/clairvoyant.hpp"
#include "assort/solver.hpp"

namespace assort {
namespace {

const LcMnl& require_lcmnl(const Instance& inst, const char* what) {
  const auto* m = std::get_if<LcMnl>(&inst.model);
  if (!m)
    throw std::invalid_argument(std::string(what) +
                                " requires an lcmnl model, got '" +
                                model_kind(inst.model) + "'");
  return *m;
}

std::vector<int> mask_to_set(std::uint64_t mask, int n) {
  std::vector<int> s;
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) s.push_back(p);
  return s;
}

bool improves(double val, const std::vector<int>& s, double best,
              const std::vector<int>& best_s) {
  if (val != best) return val > best;
  if (s.size() != best_s.size()) return s.size() < best_s.size();
  return s < best_s;
}

template <typename SegmentValue>
CapResult first_stage_enumeration(const Instance& inst, int k, int limit,
                                  SegmentValue&& segment_value) {
  const auto& m = require_lcmnl(inst, "two-stage optimization");
  const int n = inst.n();
  if (n > limit)
    throw std::invalid_argument("instance too large for first-stage "
                                "enumeration");
  if (k < 0) throw std::invalid_argument("first-stage budget must be >= 0");

  CapResult best;
  std::vector<int> empty;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::vector<int> t = mask_to_set(mask, n);
    double value = 0.0;
    for (int j = 0; j < m.segments(); ++j)
      value += m.theta[j] * segment_value(j, t);
    if (mask == 0 || improves(value, t, best.value, best.first_stage)) {
      best.value = value;
      best.first_stage = std::move(t);
    }
  }

  best.segment_value.resize(m.segments());
  for (int j = 0; j < m.segments(); ++j)
    best.segment_value[j] = segment_value(j, best.first_stage);
  return best;
}

}  // namespace

double ptaop(const Instance& inst) {
  const auto& m = require_lcmnl(inst, "per-segment optimization");
  double total = 0.0;
  for (int j = 0; j < m.segments(); ++j)
    total += m.theta[j] * mnl_optimal(inst.revenues, m.v[j]).value;
  return total;
}

CapResult cap_brute(const Instance& inst, int k, int limit) {
  const LcMnl& m = require_lcmnl(inst, "cap");
  CapResult out = first_stage_enumeration(
      inst, k, limit, [&](int j, const std::vector<int>& t) {
        return mnl_optimal_within(inst.revenues, m.v[j], t).value;
      });
  out.per_segment.resize(m.segments());
  for (int j = 0; j < m.segments(); ++j)
    out.per_segment[j] =
        mnl_optimal_within(inst.revenues, m.v[j], out.first_stage).assortment;
  return out;
}

CapResult clairvoyant_cap_brute(const Instance& inst, int k, int limit) {
  const LcMnl& m = require_lcmnl(inst, "clairvoyant cap");
  return first_stage_enumeration(
      inst, k, limit, [&](int j, const std::vector<int>& t) {
        return mnl_clairvoyant_within(inst.revenues, m.v[j], t);
      });
}

double log_ratio_bound(const Instance& inst) {
  const std::string kind = model_kind(inst.model);
  if (kind == "alpha_mnl" || kind == "markov" || kind == "sampler_rum")
    throw std::invalid_argument(
        "log-ratio bound applies to random-utility kinds only");
  const double r_o = revenue_ordered(inst).revenue;
  return (1.0 + std::log(inst.revenues.front() / inst.revenues.back())) * r_o;
}

}  // namespace assort
