#pragma once

#include <optional>
#include <span>
#include <vector>

#include "assort/choice.hpp"
#include "assort/model.hpp"
#include "assort/solver.hpp"

namespace assort {

struct BoundValue {
  double value = 0.0;
  std::vector<int> assortment;  // the set achieving the bound
};

// The ordered chain of auxiliary-MNL bounds around the true optimum:
// r_lambda <= r_a <= r_o <= r_star <= r_b <= r_omega / lambda0.
struct BoundChain {
  BoundValue r_lambda;
  BoundValue r_a;
  BoundValue r_o;
  std::optional<BoundValue> r_star;  // present when brute force ran
  BoundValue r_b;
  BoundValue r_omega_over_lambda0;
  DerivedVectors vectors;
};

BoundChain bound_chain(const Instance& inst, bool with_exact,
                       int brute_limit = 20);

// Upper bound on R(S): the best value of the b-attraction MNL over subsets
// of S, found by the prefix solve restricted to S.
double subset_upper_bound(const Instance& inst, std::span<const int> assortment);

// Cardinality-constrained sandwich r_k_a <= R^k <= r_k_b and the implied
// performance guarantee r_k_b / r_k_a for the a-heuristic.
struct ConstrainedBounds {
  double r_k_a = 0.0;
  double r_k_b = 0.0;
  double guarantee = 1.0;
  std::vector<int> s_k_a;
  std::vector<int> s_k_b;
};

ConstrainedBounds constrained_bounds(const Instance& inst, int k);

struct HeuristicValue {
  std::vector<int> assortment;
  double revenue = 0.0;  // under the true model
};

// The four auxiliary-MNL cardinality heuristics, their best (Max-H), the
// mixture-attraction baseline (LC-MNL only), and the captured opportunity
// gap against the exact constrained optimum when it was computed.
struct HeuristicReport {
  HeuristicValue by_lambda, by_a, by_omega, by_b;
  double max_h = 0.0;
  std::optional<double> baseline;  // R(S^k_v) with v_i = sum_j theta_j v_ij
  std::optional<double> optimum;   // exact R^k via brute force
  std::optional<double> cop;       // (max_h - baseline) / (optimum - baseline)
  ConstrainedBounds bounds;
};

// k >= 1. The captured opportunity gap is left unset when the denominator
// is below 1e-9; callers that follow the 5%-gap reporting convention
// filter at their own layer.
HeuristicReport heuristic_suite(const Instance& inst, int k,
                                bool with_exact = false, int brute_limit = 20);

}  // namespace assort
