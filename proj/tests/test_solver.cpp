#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "assort/choice.hpp"
#include "assort/solver.hpp"
#include "helpers.hpp"

using namespace assort;

namespace {

double root_residual(std::span<const double> r, std::span<const double> v,
                     double tau) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    lhs += v[i] * std::max(0.0, r[i] - tau);
  return std::abs(lhs - tau);
}

}  // namespace

TEST_CASE("unconstrained MNL optimum") {
  SUBCASE("tie broken to the smaller prefix") {
    const double r[] = {1.0, 0.5};
    const double v[] = {1.0, 1.0};
    MnlSolveResult res = mnl_optimal(r, v);
    CHECK(res.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(res.assortment == std::vector<int>{0});
    CHECK(res.prefix_size == 1);
  }
  SUBCASE("uniform attractions with one premium product") {
    const double r[] = {2.0, 1.0, 1.0, 1.0, 1.0};
    const double v[] = {1.0, 1.0, 1.0, 1.0, 1.0};
    CHECK(mnl_optimal(r, v).value == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("single product") {
    const double r[] = {1.0};
    const double v[] = {3.0};
    CHECK(mnl_optimal(r, v).value == doctest::Approx(0.75).epsilon(1e-14));
  }
  SUBCASE("empty input") {
    MnlSolveResult res = mnl_optimal({}, {});
    CHECK(res.value == 0.0);
    CHECK(res.assortment.empty());
  }
}

TEST_CASE("prefix maximum solves the fixed point") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(10));
    std::vector<double> r = testgen::random_revenues(rng, n);
    std::vector<double> v = testgen::random_attractions(rng, n);
    MnlSolveResult res = mnl_optimal(r, v);
    CHECK(root_residual(r, v, res.value) <= 1e-10 * std::max(1.0, res.value));
    // raising any attraction cannot lower the optimum
    std::vector<double> boosted = v;
    boosted[rng.below(n)] *= 1.0 + rng.uniform01();
    CHECK(mnl_optimal(r, boosted).value >= res.value - 1e-12);
  }
}

TEST_CASE("cardinality oracle picks top weights, low index on ties") {
  ConstraintOracle oracle = cardinality_oracle(4, 2);
  const double w[] = {0.5, 0.9, 0.5, -0.1};
  CHECK(oracle.max_weight_set(w) == std::vector<int>{0, 1});
  const double none[] = {-1.0, -2.0, -0.5, 0.0};
  CHECK(oracle.max_weight_set(none).empty());
  // value at least that of every explicitly enumerated feasible set
  SplitMix64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> weights(4);
    for (double& x : weights) x = rng.uniform01() - 0.5;
    std::vector<int> best = oracle.max_weight_set(weights);
    double best_val = 0.0;
    for (int p : best) best_val += weights[p];
    for (int mask = 0; mask < 16; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) > 2) continue;
      double val = 0.0;
      for (int p = 0; p < 4; ++p)
        if (mask >> p & 1) val += weights[p];
      CHECK(best_val >= val - 1e-15);
    }
  }
}

TEST_CASE("constrained MNL optimum") {
  SUBCASE("picks the cheaper but stickier product under k = 1") {
    const double r[] = {1.0, 0.9};
    const double v[] = {1.0, 2.0};
    MnlSolveResult res = mnl_constrained(r, v, cardinality_oracle(2, 1));
    CHECK(res.assortment == std::vector<int>{1});
    CHECK(res.value == doctest::Approx(0.6).epsilon(1e-12));
  }
  SUBCASE("inactive constraint reduces to the unconstrained optimum") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(8));
      std::vector<double> r = testgen::random_revenues(rng, n);
      std::vector<double> v = testgen::random_attractions(rng, n);
      MnlSolveResult free = mnl_optimal(r, v);
      MnlSolveResult capped = mnl_constrained(r, v, cardinality_oracle(n, n));
      CHECK(capped.value == doctest::Approx(free.value).epsilon(1e-11));
    }
  }
  SUBCASE("matches exhaustive enumeration on random instances") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Instance inst = testgen::random_mnl(1000 + seed, 12);
      const Mnl& m = std::get<Mnl>(inst.model);
      MnlSolveResult fast =
          mnl_constrained(inst.revenues, m.v, cardinality_oracle(12, 4));
      SolveResult slow = brute_force_constrained(
          inst,
          [](std::span<const int> s) { return s.size() <= 4; });
      CHECK(fast.value == doctest::Approx(slow.revenue).epsilon(1e-9));
    }
  }
  SUBCASE("k = 0 yields the empty set") {
    const double r[] = {1.0, 0.5};
    const double v[] = {1.0, 1.0};
    MnlSolveResult res = mnl_constrained(r, v, cardinality_oracle(2, 0));
    CHECK(res.assortment.empty());
    CHECK(res.value == 0.0);
  }
  SUBCASE("lying oracle is detected") {
    ConstraintOracle liar = cardinality_oracle(3, 1);
    liar.max_weight_set = [](std::span<const double>) {
      return std::vector<int>{0, 1, 2};
    };
    const double r[] = {1.0, 0.5, 0.2};
    const double v[] = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(mnl_constrained(r, v, liar), std::runtime_error);
  }
}

TEST_CASE("exhaustive search under the true model") {
  Instance inst = make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}});
  SolveResult best = brute_force_taop(inst);
  CHECK(best.revenue == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(best.assortment == std::vector<int>{0});

  SUBCASE("dominates the revenue-ordered heuristic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Instance lc = testgen::random_lcmnl(2000 + seed, 9, 3);
      CHECK(brute_force_taop(lc).revenue >=
            revenue_ordered(lc).revenue - 1e-12);
    }
  }
  SUBCASE("agrees with a direct loop over all subsets") {
    Instance lc = testgen::random_lcmnl(77, 8, 3);
    double best_val = 0.0;
    for (int mask = 0; mask < (1 << 8); ++mask) {
      std::vector<int> s;
      for (int p = 0; p < 8; ++p)
        if (mask >> p & 1) s.push_back(p);
      best_val = std::max(best_val, expected_revenue(lc, s));
    }
    CHECK(brute_force_taop(lc).revenue ==
          doctest::Approx(best_val).epsilon(1e-14));
  }
  SUBCASE("size guard") {
    Instance big = testgen::random_mnl(3, 12);
    CHECK_THROWS_AS(brute_force_taop(big, 10), std::invalid_argument);
  }
}

TEST_CASE("constrained exhaustive search") {
  Instance inst = testgen::random_lcmnl(31, 10, 3);
  auto k_of = [](int k) {
    return [k](std::span<const int> s) {
      return static_cast<int>(s.size()) <= k;
    };
  };
  SUBCASE("k = 0 returns the empty set") {
    SolveResult res = brute_force_constrained(inst, k_of(0));
    CHECK(res.assortment.empty());
    CHECK(res.revenue == 0.0);
  }
  SUBCASE("k = n matches the unconstrained search") {
    CHECK(brute_force_constrained(inst, k_of(10)).revenue ==
          doctest::Approx(brute_force_taop(inst).revenue).epsilon(1e-14));
  }
  SUBCASE("constraint binds monotonically") {
    double prev = 0.0;
    for (int k = 0; k <= 10; ++k) {
      const double val = brute_force_constrained(inst, k_of(k)).revenue;
      CHECK(val >= prev - 1e-14);
      prev = val;
    }
  }
}

TEST_CASE("revenue-ordered heuristic") {
  SUBCASE("exact for the MNL") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Instance inst = testgen::random_mnl(4000 + seed, 9);
      const Mnl& m = std::get<Mnl>(inst.model);
      CHECK(revenue_ordered(inst).revenue ==
            doctest::Approx(mnl_optimal(inst.revenues, m.v).value)
                .epsilon(1e-12));
    }
  }
  SUBCASE("single product") {
    Instance inst = make_instance({2.0}, Mnl{{3.0}});
    CHECK(revenue_ordered(inst).revenue ==
          doctest::Approx(2.0 * 0.75).epsilon(1e-14));
  }
  SUBCASE("never beats the exhaustive optimum") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Instance lc = testgen::random_lcmnl(5000 + seed, 10, 4);
      CHECK(revenue_ordered(lc).revenue <=
            brute_force_taop(lc).revenue + 1e-12);
    }
  }
}
