#include "assort/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "assort/choice.hpp"

namespace assort {
namespace {

void check_inputs(std::span<const double> r, std::span<const double> v) {
  if (r.size() != v.size())
    throw std::invalid_argument("revenue and attraction sizes differ");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0)) throw std::invalid_argument("revenues must be positive");
    if (i > 0 && r[i] > r[i - 1])
      throw std::invalid_argument("revenues must be non-increasing");
    if (!(v[i] >= 0.0) || !std::isfinite(v[i]))
      throw std::invalid_argument("attractions must be non-negative");
  }
}

std::vector<int> mask_to_set(std::uint64_t mask, int n) {
  std::vector<int> s;
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) s.push_back(p);
  return s;
}

// Better under the tie policy: higher revenue, then fewer products, then
// lexicographically smaller id sequence.
bool improves(double rev, const std::vector<int>& s, double best_rev,
              const std::vector<int>& best_s) {
  if (rev != best_rev) return rev > best_rev;
  if (s.size() != best_s.size()) return s.size() < best_s.size();
  return s < best_s;
}

}  // namespace

MnlSolveResult mnl_optimal_within(std::span<const double> r,
                                  std::span<const double> v,
                                  std::span<const int> universe) {
  MnlSolveResult out;
  double num = 0.0;
  double den = 1.0;
  double best = 0.0;
  for (int p : universe) {
    num += v[p] * r[p];
    den += v[p];
    best = std::max(best, num / den);
  }
  out.value = best;
  for (int p : universe)
    if (r[p] > best) out.assortment.push_back(p);
  out.prefix_size = static_cast<int>(out.assortment.size());
  return out;
}

MnlSolveResult mnl_optimal(std::span<const double> r,
                           std::span<const double> v) {
  check_inputs(r, v);
  std::vector<int> all(r.size());
  std::iota(all.begin(), all.end(), 0);
  return mnl_optimal_within(r, v, all);
}

ConstraintOracle cardinality_oracle(int n, int k) {
  if (k < 0) throw std::invalid_argument("cardinality bound must be >= 0");
  ConstraintOracle oracle;
  oracle.name = "cardinality-" + std::to_string(k);
  oracle.max_weight_set = [n, k](std::span<const double> w) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return w[x] > w[y]; });
    std::vector<int> s;
    for (int p : order) {
      if (static_cast<int>(s.size()) == k || !(w[p] > 0.0)) break;
      s.push_back(p);
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  oracle.feasible = [k](std::span<const int> s) {
    return static_cast<int>(s.size()) <= k;
  };
  return oracle;
}

MnlSolveResult mnl_constrained(std::span<const double> r,
                               std::span<const double> v,
                               const ConstraintOracle& oracle, double tol) {
  check_inputs(r, v);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  MnlSolveResult out;
  out.prefix_size = -1;
  if (r.empty()) return out;

  std::vector<double> weights(r.size());
  double best_rev = 0.0;
  std::vector<int> best_set;

  // g(tau) = max over feasible S of sum_i v_i (r_i - tau) - tau; strictly
  // decreasing and piecewise linear, so plain bisection is safe. Every
  // oracle set is re-scored exactly and the best one is kept.
  auto eval = [&](double tau) {
    for (std::size_t i = 0; i < r.size(); ++i) weights[i] = v[i] * (r[i] - tau);
    std::vector<int> s = oracle.max_weight_set(weights);
    if (!oracle.feasible(s))
      throw std::runtime_error("constraint oracle returned an infeasible set");
    double slack = -tau;
    double num = 0.0;
    double den = 1.0;
    for (int p : s) {
      slack += weights[p];
      num += v[p] * r[p];
      den += v[p];
    }
    const double exact = num / den;
    if (improves(exact, s, best_rev, best_set)) {
      best_rev = exact;
      best_set = std::move(s);
    }
    return slack;
  };

  double lo = 0.0;
  double hi = r[0];
  eval(lo);
  const double stop = tol * std::max(1.0, r[0]);
  for (int iter = 0; iter < 200 && hi - lo > stop; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }

  out.value = best_rev;
  out.assortment = std::move(best_set);
  const int sz = static_cast<int>(out.assortment.size());
  bool prefix = true;
  for (int i = 0; i < sz; ++i) prefix = prefix && out.assortment[i] == i;
  out.prefix_size = prefix ? sz : -1;
  return out;
}

SolveResult brute_force_taop(const Instance& inst, int limit) {
  return brute_force_constrained(
      inst, [](std::span<const int>) { return true; }, limit);
}

SolveResult brute_force_constrained(
    const Instance& inst,
    const std::function<bool(std::span<const int>)>& feasible, int limit) {
  const int n = inst.n();
  if (n > limit)
    throw std::invalid_argument(
        "instance too large for exhaustive enumeration");
  SolveResult best;
  best.method = "brute";
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> s = mask_to_set(mask, n);
    if (!feasible(s)) continue;
    const double rev = expected_revenue(inst, s);
    if (improves(rev, s, best.revenue, best.assortment)) {
      best.revenue = rev;
      best.assortment = std::move(s);
    }
  }
  return best;
}

SolveResult revenue_ordered(const Instance& inst) {
  const int n = inst.n();
  SolveResult best;
  best.method = "revenue-ordered";
  std::vector<int> prefix;
  prefix.reserve(n);
  for (int p = 0; p < n; ++p) {
    prefix.push_back(p);
    const double rev = expected_revenue(inst, prefix);
    if (rev > best.revenue) {
      best.revenue = rev;
      best.assortment = prefix;
    }
  }
  return best;
}

}  // namespace assort
