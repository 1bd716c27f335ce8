#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assort/model.hpp"

namespace assort {

// Seeded LC-MNL generator. Mean utilities are a_ij / beta with
// a_ij = ln((1 -+ sigma_i) l_ij / n), l_ij ~ U(0,10], sigma_i ~ U(0,1],
// the sign flipped by a fair coin; attractions are exp of that, clamped to
// the double exponent range. Revenues are 10, n-2 draws from U(1,10)
// sorted descending, then 1; segment weights are uniform.
struct RtInstanceSpec {
  int n = 0;
  int m = 0;
  double beta = 1.0;
  std::uint64_t seed = 0;
};

Instance gen_rt_instance(const RtInstanceSpec& spec);

// One generated instance scored against its revenue-ordered baseline.
struct BetaRow {
  int n = 0, m = 0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  double r_o = 0.0, r_star = 0.0, ptaop = 0.0, clairvoyant = 0.0;
  double taop_pct = 0.0, ptaop_pct = 0.0, clairvoyant_pct = 0.0;
  bool cert_lc = false;
};

struct BetaCell {
  int n = 0, m = 0;
  double avg_taop_pct = 0.0, max_taop_pct = 0.0;
  double avg_ptaop_pct = 0.0, max_ptaop_pct = 0.0;
  double avg_clairvoyant_pct = 0.0, max_clairvoyant_pct = 0.0;
  double cert_fraction = 0.0;
};

struct ScenarioReport {
  double beta = 0.0;
  std::uint64_t master_seed = 0;
  int instances_per_cell = 0;
  std::vector<BetaRow> rows;    // fixed (n, m, index) order
  std::vector<BetaCell> cells;  // per (n, m)
  double max_clairvoyant_pct = 0.0;  // reported, not asserted
};

struct BetaScenarioConfig {
  std::vector<int> n_list;
  std::vector<int> m_list;
  double beta = 1.0;
  int instances_per_cell = 30;
  std::uint64_t seed = 1;
  int threads = 1;  // 0 = hardware concurrency; output is identical either way
};

// Per instance: revenue-ordered, brute-force optimum (n <= 15),
// per-segment personalized revenue, exact clairvoyant revenue, and the
// segment-margin certificate. Whenever that certificate holds, the
// clairvoyant percentage is checked against its proven ceiling of 200.
ScenarioReport run_beta_scenario(const BetaScenarioConfig& cfg);

struct CardRow {
  int n = 0, m = 0, k = 0;
  std::uint64_t seed = 0;
  double optimum = 0.0;
  double ratio_lambda = 0.0, ratio_a = 0.0, ratio_omega = 0.0, ratio_b = 0.0;
  double maxh_ratio = 0.0;
  double baseline_ratio = 0.0;
  std::optional<double> cop;
  double guarantee = 0.0;
};

struct CardCell {
  int n = 0, m = 0, k = 0;
  double avg_lambda = 0.0, avg_a = 0.0, avg_omega = 0.0, avg_b = 0.0;
  double avg_maxh = 0.0;
  double avg_cop = 0.0;  // over instances whose baseline trails by > 5%
  int cop_count = 0;
  double avg_guarantee = 0.0;
};

struct CardinalityReport {
  std::uint64_t master_seed = 0;
  int instances_per_cell = 0;
  std::vector<CardRow> rows;
  std::vector<CardCell> cells;
};

struct CardinalityConfig {
  std::vector<int> n_list;
  std::vector<int> m_list;
  int instances_per_cell = 50;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Cardinality cap k = ceil(n/3); requires n <= 14 for the brute-force
// reference.
CardinalityReport run_cardinality_experiment(const CardinalityConfig& cfg);

// CSV renderings use shortest round-trip decimals so output is
// byte-identical for a fixed seed and config, regardless of worker count.
std::string scenario_csv(const ScenarioReport& report);
std::string cardinality_csv(const CardinalityReport& report);

void emit_csv(const std::string& csv, const std::string& path);

}  // namespace assort
