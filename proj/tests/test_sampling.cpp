#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "assort/choice.hpp"
#include "assort/rng.hpp"
#include "assort/sample.hpp"
#include "helpers.hpp"

using namespace assort;

TEST_CASE("gumbel noise has mean zero and variance pi^2/6") {
  SplitMix64 rng(404);
  const int draws = 1'000'000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double g = gumbel_mean_zero(rng);
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / draws;
  const double var = sumsq / draws - mean * mean;
  CHECK(std::abs(mean) < 0.005);
  CHECK(var == doctest::Approx(M_PI * M_PI / 6.0).epsilon(0.01));
}

TEST_CASE("sampled choices converge to the choice probabilities") {
  Instance inst = make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}});
  const int both[] = {0, 1};
  int counts[3] = {0, 0, 0};
  const int draws = 1'000'000;
  for (int k = 0; k < draws; ++k) {
    const int pick = sample_choice(inst, both, mix_seed({77, (std::uint64_t)k}));
    ++counts[pick == kNoPurchase ? 2 : pick];
  }
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(counts[i] / double(draws) - 1.0 / 3) < 0.002);
}

TEST_CASE("empty assortment always walks away") {
  Instance inst = make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}});
  for (std::uint64_t k = 0; k < 50; ++k)
    CHECK(sample_choice(inst, {}, k) == kNoPurchase);
}

TEST_CASE("RCS choice frequency of the most preferred product") {
  Instance inst = make_instance({1.0, 0.5}, Rcs{{0.35, 0.8}, {0, 1}});
  const int both[] = {0, 1};
  int hits = 0;
  const int draws = 200'000;
  for (int k = 0; k < draws; ++k)
    hits += sample_choice(inst, both, mix_seed({88, (std::uint64_t)k})) == 0;
  CHECK(std::abs(hits / double(draws) - 0.35) < 0.005);
}

TEST_CASE("sample_B marginals match the last-choice probabilities") {
  SUBCASE("mnl") {
    Instance inst = make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}});
    int hits = 0;
    const int draws = 1'000'000;
    for (int k = 0; k < draws; ++k)
      hits += sample_B(inst, mix_seed({99, (std::uint64_t)k}))[0];
    CHECK(std::abs(hits / double(draws) - 0.5) < 0.002);
  }
  SUBCASE("lcmnl with one segment has mnl marginals") {
    Instance lc = make_instance({1.0, 0.5},
                                LcMnl{{1.0}, {{0.7, 1.3}}});
    Instance plain = make_instance({1.0, 0.5}, Mnl{{0.7, 1.3}});
    DerivedVectors a = derive_vectors(lc);
    DerivedVectors b = derive_vectors(plain);
    CHECK(a.omega[0] == doctest::Approx(b.omega[0]).epsilon(1e-15));
    CHECK(a.omega[1] == doctest::Approx(b.omega[1]).epsilon(1e-15));
    int hits = 0;
    const int draws = 200'000;
    for (int k = 0; k < draws; ++k)
      hits += sample_B(lc, mix_seed({111, (std::uint64_t)k}))[1];
    CHECK(std::abs(hits / double(draws) - b.omega[1]) < 0.005);
  }
}

TEST_CASE("RCS acceptance coins are empirically uncorrelated") {
  Instance inst = make_instance({1.0, 0.5}, Rcs{{0.4, 0.6}, {1, 0}});
  const int draws = 200'000;
  double s0 = 0, s1 = 0, s01 = 0;
  for (int k = 0; k < draws; ++k) {
    std::vector<char> b = sample_B(inst, mix_seed({123, (std::uint64_t)k}));
    s0 += b[0];
    s1 += b[1];
    s01 += b[0] && b[1];
  }
  const double cov = s01 / draws - (s0 / draws) * (s1 / draws);
  CHECK(std::abs(cov) < 0.005);
}

TEST_CASE("MNL acceptance events are positively dependent through U_0") {
  Instance inst = make_instance({1.0, 0.5}, Mnl{{1.0, 1.0}});
  const int draws = 200'000;
  double s0 = 0, s1 = 0, s01 = 0;
  for (int k = 0; k < draws; ++k) {
    std::vector<char> b = sample_B(inst, mix_seed({321, (std::uint64_t)k}));
    s0 += b[0];
    s1 += b[1];
    s01 += b[0] && b[1];
  }
  const double cov = s01 / draws - (s0 / draws) * (s1 / draws);
  CHECK(cov > 0.01);  // sharing one outside draw couples the components
}

TEST_CASE("sampler_rum runs through the generic paths") {
  SamplerRum rum;
  rum.n = 2;
  rum.sample = [](std::uint64_t seed) {
    SplitMix64 rng(seed);
    Utilities u;
    u.outside = gumbel_mean_zero(rng);
    u.product = {std::log(1.0) + gumbel_mean_zero(rng),
                 std::log(1.0) + gumbel_mean_zero(rng)};
    return u;
  };
  Instance inst = make_instance({1.0, 0.5}, rum);
  CHECK_THROWS_AS(choice_distribution(inst, testgen::full_set(2)),
                  std::invalid_argument);
  int hits = 0;
  const int draws = 200'000;
  for (int k = 0; k < draws; ++k)
    hits += sample_B(inst, mix_seed({777, (std::uint64_t)k}))[0];
  CHECK(std::abs(hits / double(draws) - 0.5) < 0.005);
  // same seed, same realization
  Utilities u1 = sample_utilities(inst, 42);
  Utilities u2 = sample_utilities(inst, 42);
  CHECK(u1.outside == u2.outside);
  CHECK(u1.product == u2.product);
}

TEST_CASE("unsupported kinds are rejected") {
  Instance nested = testgen::random_nested(3, 6, 2);
  CHECK_THROWS_AS(sample_choice(nested, testgen::full_set(6), 1),
                  std::invalid_argument);
  Instance markov = testgen::random_markov(4, 5);
  CHECK_THROWS_AS(sample_B(markov, 1), std::invalid_argument);
}
