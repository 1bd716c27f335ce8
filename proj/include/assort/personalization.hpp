#pragma once

#include <vector>

#include "assort/model.hpp"

namespace assort {

// Revenue of offering each LC-MNL segment its own optimal assortment:
// sum_j theta_j R*_j. LC-MNL only.
double ptaop(const Instance& inst);

// Two-stage problems: pick a universe T of at most k products, then serve
// each segment from inside T.
struct CapResult {
  std::vector<int> first_stage;  // T, |T| <= k
  double value = 0.0;
  std::vector<std::vector<int>> per_segment;  // second-stage assortments (CAP)
  std::vector<double> segment_value;
};

// Exact customized assortment problem by first-stage enumeration; the
// second stage is a prefix solve inside T per segment. Requires n <= limit.
CapResult cap_brute(const Instance& inst, int k, int limit = 16);

// Same first stage, but the second stage is the clairvoyant revenue on T.
CapResult clairvoyant_cap_brute(const Instance& inst, int k, int limit = 16);

// (1 + ln(r_1 / r_n)) * R^o, an unconditional clairvoyant bound for
// random-utility kinds.
double log_ratio_bound(const Instance& inst);

}  // namespace assort
