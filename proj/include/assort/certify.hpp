#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assort/clairvoyant.hpp"
#include "assort/model.hpp"

namespace assort {

// Sufficient conditions under which the clairvoyant revenue is provably at
// most `factor` times the best revenue-ordered revenue.
enum class CertKind {
  ro_condition,     // R*_omega <= R^o                          -> factor 2
  omega_condition,  // odds ratio >= omega on S*_omega          -> factor 2
  phi_search,       // largest phi with the scaled condition    -> factor 2/phi
  phi_min,          // phi = min lambda_i / (omega_i (1-omega_i))
  alpha_mnl,        // closed-form phi for alpha-MNL / GAM
  nested_logit,     // per-nest dissimilarity condition         -> factor 2
  lc_mnl,           // segment-weighted margin condition        -> factor 2
  lc_quick_phi,     // phi = min_i (min_j v_ij) / omega_i
  log_ratio,        // unconditional factor 1 + ln(r_1 / r_n)
};

enum class CertOutcome { holds, holds_with_factor, inconclusive };

struct Certificate {
  CertKind kind;
  CertOutcome outcome = CertOutcome::inconclusive;
  double factor = 0.0;  // proven bound on R_bar / R^o when conclusive
  std::vector<std::pair<std::string, double>> witness;
  std::vector<int> witness_set;  // the assortment the condition was checked on
};

// CLI spellings: ro, omega, phi, phi-min, alpha, nl, lc, lc-phi, log.
CertKind cert_kind_from_name(std::string_view name);
std::string cert_kind_name(CertKind kind);
std::string cert_outcome_name(CertOutcome outcome);

// Runs one certificate. Throws std::invalid_argument when the kind does
// not apply to the instance's model. Whenever the certificate is
// conclusive and the clairvoyant revenue has a closed form, the claimed
// factor is re-verified numerically against it.
Certificate certify(const Instance& inst, CertKind kind);

// Descending grid (1.00, 0.99, ..., 0.01) over the scaled condition, with
// a bisection refinement inside the bracketing step. The condition is
// re-evaluated from scratch at every phi because the candidate assortment
// changes discretely; no monotonicity in phi is assumed.
struct PhiSearchResult {
  double phi = 0.0;
  Certificate cert;
};

PhiSearchResult phi_search(const Instance& inst, double grid_step = 0.01,
                           double refine_tol = 1e-6);

// Markov-chain family on which the clairvoyant-to-optimal ratio approaches
// the number of products as eps -> 0: consumers enter at the cheapest
// product and walk toward more expensive ones, so every assortment earns
// the same revenue while the clairvoyant splits consumers by their exit
// point. Revenues are r_i = omega_1 / omega_i with
// omega_i = eps^(n-i) (1 - eps^i).
struct MarkovFixture {
  Instance instance;
  double ratio = 0.0;   // closed form: sum_i (1 - eps) / (1 - eps^i)
  double r_bar = 0.0;   // closed form
  double r_star = 0.0;  // closed form, = omega_1
  double ratio_model = 0.0;  // recomputed through the absorption solver
  double r_bar_model = 0.0;
  double r_star_model = 0.0;
  ClairvoyantResult clairvoyant;  // exact_markov_fixture method
};

MarkovFixture markov_tight_fixture(int n, double eps);

}  // namespace assort
