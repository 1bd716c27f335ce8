#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

namespace assort {

// Products are indexed 0..n-1 and are always ordered by non-increasing
// revenue. The no-purchase alternative is not a product index; operations
// that can return it use kNoPurchase. Human-facing output (CLI, JSON,
// CSV) numbers products 1..n.
inline constexpr int kNoPurchase = -1;

struct Mnl {
  std::vector<double> v;  // positive attractions; no-purchase normalized to 1
};

struct LcMnl {
  std::vector<double> theta;           // positive segment weights, sum to 1
  std::vector<std::vector<double>> v;  // v[segment][product], positive

  int segments() const { return static_cast<int>(theta.size()); }
};

// MNL whose in-assortment choice probabilities are scaled product-wise by
// alpha. Well defined when sum_i (alpha_i - 1)^+ v_i <= 1, which keeps the
// no-purchase probability non-negative for every assortment.
struct AlphaMnl {
  std::vector<double> alpha;  // non-negative
  Mnl base;
};

// Attraction model in which a product not offered keeps a shadow
// attraction w_i that still competes against the offered set.
struct Gam {
  std::vector<double> v;
  std::vector<double> w;  // 0 <= w_i < v_i
};

// Two-stage nest-then-product model. Products are flattened nest-major
// (all of nest 0's slots, then nest 1's, ...); the flattened order must
// agree with the instance's revenue order.
struct NestedLogit {
  std::vector<double> gamma;           // per-nest dissimilarity, > 0
  std::vector<std::vector<double>> v;  // v[nest][slot], > 0
  double v0 = 1.0;                     // no-purchase attraction, > 0

  int nests() const { return static_cast<int>(v.size()); }
  int total_products() const {
    int n = 0;
    for (const auto& nest : v) n += static_cast<int>(nest.size());
    return n;
  }
};

// Arrive-then-substitute model. State 0 is the no-purchase state and is
// absorbing; state p+1 is product p. A consumer arriving at or walking
// into an offered product's state buys it; a consumer walking into state 0
// leaves. Limited to n <= 25 so the absorption system stays a dense solve.
struct MarkovChain {
  std::vector<double> arrival;           // size n+1, non-negative, sums to 1
  std::vector<std::vector<double>> rho;  // (n+1)^2, row-stochastic, row 0 = e_0
};

// Independent attention coins plus a strict preference order; the consumer
// buys the most preferred product that caught their attention.
struct Rcs {
  std::vector<double> attention;  // in (0,1)
  std::vector<int> preference;    // permutation of 0..n-1, most preferred first
};

struct Utilities {
  double outside = 0.0;
  std::vector<double> product;
};

// Opaque random-utility model, usable for Monte Carlo only. The callable
// must be deterministic in the seed.
struct SamplerRum {
  int n = 0;
  std::function<Utilities(std::uint64_t)> sample;
};

using ChoiceModel = std::variant<Mnl, LcMnl, AlphaMnl, Gam, NestedLogit,
                                 MarkovChain, Rcs, SamplerRum>;

int model_dimension(const ChoiceModel& model);

// "mnl", "lcmnl", "alpha_mnl", "gam", "nested_logit", "markov", "rcs",
// "sampler_rum".
std::string model_kind(const ChoiceModel& model);

// Checks every structural invariant of the model against the product count
// n; throws std::invalid_argument naming the first violated invariant.
ChoiceModel validate_model(ChoiceModel model, int n);

struct Instance {
  std::vector<double> revenues;  // positive, non-increasing
  ChoiceModel model;

  int n() const { return static_cast<int>(revenues.size()); }
};

// Validating constructor: checks the revenue ordering and the model.
Instance make_instance(std::vector<double> revenues, ChoiceModel model);

}  // namespace assort
