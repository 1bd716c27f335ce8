#pragma once

#include <span>
#include <vector>

#include "assort/model.hpp"

namespace assort {

// Choice probabilities for one offered assortment; prob[k] belongs to
// assortment[k] and the entries sum to one together with no_purchase.
struct ChoiceDist {
  std::vector<double> prob;
  double no_purchase = 0.0;
};

// assortment must be a sorted list of distinct product ids. Every model
// kind except SamplerRum is supported; the Markov chain is evaluated by
// eliminating the non-offered states.
ChoiceDist choice_distribution(const Instance& inst,
                               std::span<const int> assortment);

// P(alt, S); alt must be a member of S, or kNoPurchase.
double choice_prob(const Instance& inst, int alt,
                   std::span<const int> assortment);

double expected_revenue(const Instance& inst, std::span<const int> assortment);

// First-choice and last-choice probabilities plus the modified vectors
// feeding every auxiliary-MNL bound.
struct DerivedVectors {
  std::vector<double> lambda;  // P(i, N)
  double lambda0 = 0.0;        // P(0, N)
  std::vector<double> omega;   // P(i, {i})
  std::vector<double> a;       // lambda_i / (1 - omega_i)
  std::vector<double> b;       // omega_i / lambda0
};

// Requires P(0, N) > 1e-15 and omega_i in (0, 1); the modified vectors are
// numerically meaningless otherwise and the model is rejected.
DerivedVectors derive_vectors(const Instance& inst);

// Rewrites a GAM as an alpha-MNL with identical choice probabilities.
AlphaMnl gam_to_alpha(const Gam& gam);

}  // namespace assort
