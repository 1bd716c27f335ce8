#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "assort/model.hpp"

namespace assort {

// Whether the model can produce utility realizations (MNL, LC-MNL,
// SamplerRum).
bool supports_utility_sampling(const ChoiceModel& model);

// Whether sample_choice / sample_B work (utility kinds plus RCS).
bool supports_sampling(const ChoiceModel& model);

// One utility realization. Gumbel noise is mean zero; the no-purchase
// utility is drawn first, then products in index order, so a fixed seed
// pins the whole vector.
Utilities sample_utilities(const Instance& inst, std::uint64_t seed);

// Chosen alternative in S, or kNoPurchase. An empty assortment always
// returns kNoPurchase.
int sample_choice(const Instance& inst, std::span<const int> assortment,
                  std::uint64_t seed);

// B[i] = 1 iff product i would be bought if offered alone. For MNL and
// LC-MNL all components share one no-purchase utility draw, preserving the
// positive dependence; RCS coins are independent by construction.
std::vector<char> sample_B(const Instance& inst, std::uint64_t seed);

}  // namespace assort
