#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "assort/choice.hpp"
#include "assort/model.hpp"
#include "helpers.hpp"

using namespace assort;

namespace {

Instance mnl2(double v1 = 1.0, double v2 = 1.0, double r1 = 1.0,
              double r2 = 0.5) {
  return make_instance({r1, r2}, Mnl{{v1, v2}});
}

// Independent oracle for the RCS model: enumerate every attention-coin
// outcome and accumulate the probability of each purchase.
double rcs_prob_by_enumeration(const Rcs& m, const std::vector<int>& offered,
                               int alt) {
  const int n = static_cast<int>(m.attention.size());
  std::vector<int> rank(n);
  for (int pos = 0; pos < n; ++pos) rank[m.preference[pos]] = pos;
  double total = 0.0;
  const int count = static_cast<int>(offered.size());
  for (int mask = 0; mask < (1 << count); ++mask) {
    double pr = 1.0;
    int chosen = kNoPurchase;
    for (int idx = 0; idx < count; ++idx) {
      const int p = offered[idx];
      if (mask >> idx & 1) {
        pr *= m.attention[p];
        if (chosen == kNoPurchase || rank[p] < rank[chosen]) chosen = p;
      } else {
        pr *= 1.0 - m.attention[p];
      }
    }
    if (chosen == alt) total += pr;
  }
  return total;
}

}  // namespace

TEST_CASE("validation accepts and rejects per the invariants") {
  CHECK_NOTHROW(make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}}));
  // infeasible alpha load: sum (alpha-1)^+ v = 4 > 1
  CHECK_THROWS_AS(make_instance({1.0, 0.5},
                                AlphaMnl{{3.0, 3.0}, Mnl{{1.0, 1.0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_instance({1.0, 0.5},
                                LcMnl{{0.6, 0.5},
                                      {{1.0, 1.0}, {1.0, 1.0}}}),
                  std::invalid_argument);
  // revenues must be sorted and positive
  CHECK_THROWS_AS(make_instance({0.5, 1.0}, Mnl{{1.0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_instance({1.0, -0.5}, Mnl{{1.0, 1.0}}),
                  std::invalid_argument);
  // dimension mismatch
  CHECK_THROWS_AS(make_instance({1.0, 0.5, 0.2}, Mnl{{1.0, 1.0}}),
                  std::invalid_argument);
  // markov rows must be stochastic
  MarkovChain bad;
  bad.arrival = {0.5, 0.25, 0.25};
  bad.rho = {{1.0, 0.0, 0.0}, {0.3, 0.3, 0.3}, {0.2, 0.4, 0.4}};
  CHECK_THROWS_AS(make_instance({1.0, 0.5}, bad), std::invalid_argument);
}

TEST_CASE("basic choice probabilities") {
  Instance inst = mnl2();
  const int both[] = {0, 1};
  CHECK(choice_prob(inst, 0, both) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(choice_prob(inst, kNoPurchase, std::span<const int>{}) == 1.0);
  CHECK_THROWS_AS(choice_prob(inst, 1, std::span<const int>(both, 1)),
                  std::invalid_argument);

  Instance gam = make_instance({1.0, 0.5}, Gam{{2.0, 2.0}, {1.0, 1.0}});
  const int first[] = {0};
  CHECK(choice_prob(gam, 0, first) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("expected revenue") {
  Instance inst = mnl2();
  const int first[] = {0};
  const int both[] = {0, 1};
  CHECK(expected_revenue(inst, first) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(expected_revenue(inst, std::span<const int>{}) == 0.0);
  CHECK(expected_revenue(inst, both) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("probabilities sum to one across model kinds") {
  std::vector<Instance> zoo;
  zoo.push_back(testgen::random_mnl(11, 8));
  zoo.push_back(testgen::random_lcmnl(12, 8, 3));
  zoo.push_back(testgen::random_gam(13, 8));
  zoo.push_back(testgen::random_rcs(14, 8));
  zoo.push_back(testgen::random_markov(15, 8));
  zoo.push_back(testgen::random_nested(16, 8, 3));
  zoo.push_back(make_instance({2.0, 1.0},
                              AlphaMnl{{1.4, 0.6}, Mnl{{0.5, 0.9}}}));
  SplitMix64 rng(99);
  for (const Instance& inst : zoo) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> s = testgen::random_subset(rng, inst.n());
      ChoiceDist d = choice_distribution(inst, s);
      double total = d.no_purchase;
      for (double p : d.prob) total += p;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("regularity: offering more never raises a product's share") {
  std::vector<Instance> zoo;
  zoo.push_back(testgen::random_mnl(21, 7));
  zoo.push_back(testgen::random_lcmnl(22, 7, 3));
  zoo.push_back(testgen::random_gam(23, 7));
  zoo.push_back(testgen::random_rcs(24, 7));
  zoo.push_back(testgen::random_markov(25, 7));
  zoo.push_back(testgen::random_nested(26, 7, 2));
  SplitMix64 rng(7);
  for (const Instance& inst : zoo) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> small = testgen::random_subset(rng, inst.n());
      std::vector<int> big = small;
      for (int p = 0; p < inst.n(); ++p)
        if (!std::binary_search(small.begin(), small.end(), p) &&
            rng.uniform01() < 0.5)
          big.insert(std::lower_bound(big.begin(), big.end(), p), p);
      if (small.empty()) continue;
      ChoiceDist ds = choice_distribution(inst, small);
      ChoiceDist db = choice_distribution(inst, big);
      for (std::size_t i = 0; i < small.size(); ++i) {
        const std::size_t at =
            std::lower_bound(big.begin(), big.end(), small[i]) - big.begin();
        CHECK(db.prob[at] <= ds.prob[i] + 1e-12);
      }
    }
  }
}

TEST_CASE("alpha = 1 reproduces the MNL exactly") {
  Instance plain = testgen::random_mnl(31, 8);
  const Mnl& base = std::get<Mnl>(plain.model);
  Instance shaken = make_instance(
      plain.revenues, AlphaMnl{std::vector<double>(8, 1.0), base});
  for (int mask = 0; mask < (1 << 8); ++mask) {
    std::vector<int> s;
    for (int p = 0; p < 8; ++p)
      if (mask >> p & 1) s.push_back(p);
    ChoiceDist a = choice_distribution(plain, s);
    ChoiceDist b = choice_distribution(shaken, s);
    CHECK(a.no_purchase == doctest::Approx(b.no_purchase).epsilon(1e-15));
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(a.prob[i] == doctest::Approx(b.prob[i]).epsilon(1e-15));
  }
}

TEST_CASE("unit dissimilarity collapses the nested model to an MNL") {
  SplitMix64 rng(41);
  std::vector<double> revenues = testgen::random_revenues(rng, 9);
  NestedLogit nested;
  nested.v0 = 1.7;
  nested.gamma = {1.0, 1.0, 1.0};
  nested.v = {testgen::random_attractions(rng, 3),
              testgen::random_attractions(rng, 3),
              testgen::random_attractions(rng, 3)};
  Instance nl = make_instance(revenues, nested);

  std::vector<double> flat;
  for (const auto& nest : nested.v)
    for (double v : nest) flat.push_back(v / nested.v0);
  Instance mnl = make_instance(revenues, Mnl{flat});

  for (int mask = 0; mask < (1 << 9); ++mask) {
    std::vector<int> s;
    for (int p = 0; p < 9; ++p)
      if (mask >> p & 1) s.push_back(p);
    ChoiceDist a = choice_distribution(nl, s);
    ChoiceDist b = choice_distribution(mnl, s);
    CHECK(a.no_purchase == doctest::Approx(b.no_purchase).epsilon(1e-12));
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(a.prob[i] == doctest::Approx(b.prob[i]).epsilon(1e-12));
  }
}

TEST_CASE("derived vectors on the symmetric two-product MNL") {
  DerivedVectors d = derive_vectors(mnl2());
  CHECK(d.lambda[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(d.lambda[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(d.lambda0 == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(d.omega[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.omega[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.a[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(d.b[0] == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("derived vectors: invariants on random regular instances") {
  std::vector<Instance> zoo;
  for (int s = 0; s < 10; ++s) {
    zoo.push_back(testgen::random_lcmnl(100 + s, 8, 3));
    zoo.push_back(testgen::random_gam(200 + s, 8));
    zoo.push_back(testgen::random_rcs(300 + s, 8));
    zoo.push_back(testgen::random_markov(400 + s, 8));
  }
  for (const Instance& inst : zoo) {
    DerivedVectors d = derive_vectors(inst);
    CHECK(d.lambda0 > 0.0);
    for (int p = 0; p < inst.n(); ++p) {
      CHECK(d.omega[p] > 0.0);
      CHECK(d.omega[p] < 1.0);
      CHECK(d.a[p] >= d.lambda[p]);        // dividing by 1 - omega <= 1
      CHECK(d.a[p] <= d.b[p] + 1e-12);     // regular models order the pair
    }
  }
}

TEST_CASE("derived vectors for the RCS example") {
  Instance inst = make_instance({1.0, 0.5}, Rcs{{0.5, 0.5}, {0, 1}});
  DerivedVectors d = derive_vectors(inst);
  CHECK(d.omega[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.omega[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.lambda[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.lambda[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(d.lambda0 == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("RCS probabilities match coin enumeration") {
  Instance inst = testgen::random_rcs(55, 7);
  const Rcs& m = std::get<Rcs>(inst.model);
  SplitMix64 rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> s = testgen::random_subset(rng, 7);
    ChoiceDist d = choice_distribution(inst, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(d.prob[i] ==
            doctest::Approx(rcs_prob_by_enumeration(m, s, s[i])).epsilon(1e-12));
    CHECK(d.no_purchase ==
          doctest::Approx(rcs_prob_by_enumeration(m, s, kNoPurchase))
              .epsilon(1e-12));
  }
}

TEST_CASE("lambda0 cutoff rejects models without a walk-away share") {
  // A single product with near-one attraction drives P(0, N) below cutoff.
  Instance inst = make_instance({1.0}, Mnl{{1e20}});
  CHECK_THROWS_AS(derive_vectors(inst), std::invalid_argument);
}

TEST_CASE("GAM converts to an equivalent alpha-MNL") {
  SUBCASE("zero shadow weights give alpha = 1") {
    AlphaMnl a = gam_to_alpha(Gam{{1.5, 0.7}, {0.0, 0.0}});
    CHECK(a.alpha[0] == doctest::Approx(1.0));
    CHECK(a.alpha[1] == doctest::Approx(1.0));
    CHECK(a.base.v[0] == doctest::Approx(1.5));
  }
  SUBCASE("worked two-product example") {
    Gam g{{2.0, 2.0}, {1.0, 1.0}};
    AlphaMnl a = gam_to_alpha(g);
    CHECK(a.alpha[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(a.base.v[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
    Instance gi = make_instance({1.0, 0.5}, g);
    Instance ai = make_instance({1.0, 0.5}, a);
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> s;
      for (int p = 0; p < 2; ++p)
        if (mask >> p & 1) s.push_back(p);
      ChoiceDist dg = choice_distribution(gi, s);
      ChoiceDist da = choice_distribution(ai, s);
      CHECK(dg.no_purchase == doctest::Approx(da.no_purchase).epsilon(1e-12));
      for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(dg.prob[i] == doctest::Approx(da.prob[i]).epsilon(1e-12));
    }
    const int first[] = {0};
    CHECK(choice_prob(gi, 0, first) == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("random GAM agrees on random (i, S) pairs") {
    Instance gi = testgen::random_gam(66, 6);
    const Gam& g = std::get<Gam>(gi.model);
    Instance ai = make_instance(gi.revenues, gam_to_alpha(g));
    SplitMix64 rng(67);
    int checked = 0;
    while (checked < 20) {
      std::vector<int> s = testgen::random_subset(rng, 6);
      if (s.empty()) continue;
      const int i = s[rng.below(s.size())];
      CHECK(choice_prob(gi, i, s) ==
            doctest::Approx(choice_prob(ai, i, s)).epsilon(1e-12));
      ++checked;
    }
  }
}
