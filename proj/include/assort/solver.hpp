#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "assort/model.hpp"

namespace assort {

struct MnlSolveResult {
  double value = 0.0;  // optimal expected revenue; the fixed-point root
  std::vector<int> assortment;
  int prefix_size = 0;  // -1 when the assortment is not a revenue prefix
};

// Unconstrained MNL optimum for revenues r (non-increasing) and
// attractions v >= 0. The value is both the best prefix revenue and the
// unique root of sum_i v_i (r_i - tau)^+ = tau; the assortment is
// {i : r_i > value}, which breaks prefix ties toward the smaller set.
MnlSolveResult mnl_optimal(std::span<const double> r,
                           std::span<const double> v);

// Same, with candidates restricted to `universe` (sorted product ids).
MnlSolveResult mnl_optimal_within(std::span<const double> r,
                                  std::span<const double> v,
                                  std::span<const int> universe);

// Linear-maximization oracle over a feasible family of assortments. The
// solver only needs argmax_S sum_{i in S} c_i plus a feasibility check, so
// other totally unimodular families can be plugged in without touching it.
struct ConstraintOracle {
  std::function<std::vector<int>(std::span<const double>)> max_weight_set;
  std::function<bool(std::span<const int>)> feasible;
  std::string name;
};

// Keeps the k largest strictly positive weights; ties go to the lower
// index.
ConstraintOracle cardinality_oracle(int n, int k);

// Constrained MNL optimum. For fixed S, R_v(S) >= tau iff
// sum_{i in S} v_i (r_i - tau) >= tau, so the optimum is the root of
// tau -> max_feasible sum_i v_i (r_i - tau) - tau, bracketed on [0, r_1]
// and bisected; the best oracle set seen is re-scored exactly. Throws if
// the oracle ever returns an infeasible set.
MnlSolveResult mnl_constrained(std::span<const double> r,
                               std::span<const double> v,
                               const ConstraintOracle& oracle,
                               double tol = 1e-12);

struct SolveResult {
  std::vector<int> assortment;
  double revenue = 0.0;
  std::string method;
};

// Exhaustive optimum under the true model; ties break to the smaller then
// lexicographically smaller assortment. Requires n <= limit.
SolveResult brute_force_taop(const Instance& inst, int limit = 20);

SolveResult brute_force_constrained(
    const Instance& inst,
    const std::function<bool(std::span<const int>)>& feasible,
    int limit = 20);

// Best revenue-ordered prefix [0..j) under the true model; n evaluations.
SolveResult revenue_ordered(const Instance& inst);

}  // namespace assort
