// Seeded random-instance factories shared by the unit and acceptance
// suites. Everything is driven by explicit seeds so failures replay.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "assort/model.hpp"
#include "assort/rng.hpp"

namespace testgen {

inline std::vector<double> random_revenues(assort::SplitMix64& rng, int n,
                                           double lo = 1.0, double hi = 10.0) {
  std::vector<double> r(n);
  for (double& x : r) x = lo + (hi - lo) * rng.uniform01();
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

inline std::vector<double> random_attractions(assort::SplitMix64& rng, int n,
                                              double lo = 0.05,
                                              double hi = 2.0) {
  std::vector<double> v(n);
  for (double& x : v) x = lo + (hi - lo) * rng.uniform01();
  return v;
}

inline assort::Instance random_mnl(std::uint64_t seed, int n) {
  assort::SplitMix64 rng(seed);
  return assort::make_instance(random_revenues(rng, n),
                               assort::Mnl{random_attractions(rng, n)});
}

inline assort::Instance random_lcmnl(std::uint64_t seed, int n, int m) {
  assort::SplitMix64 rng(seed);
  std::vector<double> revenues = random_revenues(rng, n);
  assort::LcMnl model;
  model.theta.resize(m);
  double total = 0.0;
  for (double& t : model.theta) {
    t = 0.1 + rng.uniform01();
    total += t;
  }
  for (double& t : model.theta) t /= total;
  model.v.resize(m);
  for (int j = 0; j < m; ++j) model.v[j] = random_attractions(rng, n);
  return assort::make_instance(std::move(revenues), std::move(model));
}

inline assort::Instance random_gam(std::uint64_t seed, int n) {
  assort::SplitMix64 rng(seed);
  std::vector<double> revenues = random_revenues(rng, n);
  assort::Gam model;
  model.v = random_attractions(rng, n, 0.1, 2.0);
  model.w.resize(n);
  for (int i = 0; i < n; ++i) model.w[i] = model.v[i] * 0.9 * rng.uniform01();
  return assort::make_instance(std::move(revenues), std::move(model));
}

inline assort::Instance random_rcs(std::uint64_t seed, int n) {
  assort::SplitMix64 rng(seed);
  std::vector<double> revenues = random_revenues(rng, n);
  assort::Rcs model;
  model.attention.resize(n);
  for (double& a : model.attention) a = 0.05 + 0.9 * rng.uniform01();
  model.preference.resize(n);
  std::iota(model.preference.begin(), model.preference.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(model.preference[i],
              model.preference[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return assort::make_instance(std::move(revenues), std::move(model));
}

// Dense random chain: every row spreads positive mass over all states, so
// absorption is well defined and the walk-away share is positive.
inline assort::Instance random_markov(std::uint64_t seed, int n) {
  assort::SplitMix64 rng(seed);
  std::vector<double> revenues = random_revenues(rng, n);
  assort::MarkovChain model;
  auto random_dist = [&rng](int size) {
    std::vector<double> d(size);
    double total = 0.0;
    for (double& x : d) {
      x = 0.05 + rng.uniform01();
      total += x;
    }
    for (double& x : d) x /= total;
    return d;
  };
  model.arrival = random_dist(n + 1);
  model.rho.assign(n + 1, {});
  model.rho[0].assign(n + 1, 0.0);
  model.rho[0][0] = 1.0;
  for (int s = 1; s <= n; ++s) model.rho[s] = random_dist(n + 1);
  return assort::make_instance(std::move(revenues), std::move(model));
}

// Nest sizes as equal as possible; revenues sorted over the flattened ids.
inline assort::Instance random_nested(std::uint64_t seed, int n, int nests,
                                      double gamma_lo = 0.4,
                                      double gamma_hi = 1.6) {
  assort::SplitMix64 rng(seed);
  std::vector<double> revenues = random_revenues(rng, n);
  assort::NestedLogit model;
  model.v0 = 0.5 + rng.uniform01();
  model.gamma.resize(nests);
  for (double& g : model.gamma)
    g = gamma_lo + (gamma_hi - gamma_lo) * rng.uniform01();
  model.v.resize(nests);
  for (int i = 0; i < nests; ++i) {
    const int size = n / nests + (i < n % nests ? 1 : 0);
    model.v[i] = random_attractions(rng, size, 0.1, 1.5);
  }
  return assort::make_instance(std::move(revenues), std::move(model));
}

inline std::vector<int> random_subset(assort::SplitMix64& rng, int n) {
  std::vector<int> s;
  for (int p = 0; p < n; ++p)
    if (rng.uniform01() < 0.5) s.push_back(p);
  return s;
}

inline std::vector<int> full_set(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace testgen
