#include "assort/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "assort/choice.hpp"
#include "assort/solver.hpp"

namespace assort {
namespace {

constexpr double kVerifySlack = 1e-9;

bool kind_applicable(CertKind kind, const ChoiceModel& model) {
  const bool exact_eval = !std::holds_alternative<SamplerRum>(model);
  switch (kind) {
    case CertKind::ro_condition:
    case CertKind::omega_condition:
    case CertKind::phi_search:
      return exact_eval;
    case CertKind::phi_min:
      // Needs the odds-ratio lower bound a_i, which rests on regularity;
      // the alpha-MNL does not guarantee it.
      return exact_eval && !std::holds_alternative<AlphaMnl>(model);
    case CertKind::alpha_mnl:
      return std::holds_alternative<AlphaMnl>(model) ||
             std::holds_alternative<Gam>(model) ||
             std::holds_alternative<Mnl>(model);
    case CertKind::nested_logit:
      return std::holds_alternative<NestedLogit>(model);
    case CertKind::lc_mnl:
    case CertKind::lc_quick_phi:
      return std::holds_alternative<LcMnl>(model);
    case CertKind::log_ratio:
      return std::holds_alternative<Mnl>(model) ||
             std::holds_alternative<LcMnl>(model) ||
             std::holds_alternative<Gam>(model) ||
             std::holds_alternative<NestedLogit>(model) ||
             std::holds_alternative<Rcs>(model);
  }
  return false;
}

// Margins P(i, S*) - phi * omega_i * P(0, S*) on the optimal assortment of
// the phi-scaled last-choice MNL; all non-negative certifies factor 2/phi.
struct ScaledCheck {
  bool ok = false;
  double min_margin = 0.0;
  double aux_value = 0.0;        // R* of the phi-scaled auxiliary model
  std::vector<int> assortment;   // S*_{phi omega}
};

ScaledCheck scaled_condition(const Instance& inst, const DerivedVectors& dv,
                             double phi) {
  std::vector<double> scaled(dv.omega.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = phi * dv.omega[i];
  MnlSolveResult aux = mnl_optimal(inst.revenues, scaled);
  ChoiceDist dist = choice_distribution(inst, aux.assortment);

  ScaledCheck check;
  check.aux_value = aux.value;
  check.min_margin = std::numeric_limits<double>::infinity();
  check.ok = true;
  for (std::size_t k = 0; k < aux.assortment.size(); ++k) {
    const double margin =
        dist.prob[k] - phi * dv.omega[aux.assortment[k]] * dist.no_purchase;
    check.min_margin = std::min(check.min_margin, margin);
    if (!(margin >= 0.0)) check.ok = false;
  }
  check.assortment = std::move(aux.assortment);
  return check;
}

void verify_factor(const Instance& inst, Certificate& cert) {
  if (cert.outcome == CertOutcome::inconclusive) return;
  if (!clairvoyant_exact_supported(inst.model)) return;
  const double r_bar = clairvoyant_exact(inst).value;
  const double r_o = revenue_ordered(inst).revenue;
  cert.witness.emplace_back("r_bar", r_bar);
  cert.witness.emplace_back("r_o", r_o);
  if (r_bar > cert.factor * r_o + kVerifySlack)
    throw std::logic_error("certificate violated by the exact clairvoyant "
                           "revenue; this is a bug");
}

Certificate certify_ro(const Instance& inst) {
  Certificate cert{CertKind::ro_condition};
  DerivedVectors dv = derive_vectors(inst);
  const double r_omega = mnl_optimal(inst.revenues, dv.omega).value;
  const double r_o = revenue_ordered(inst).revenue;
  cert.witness.emplace_back("r_omega_star", r_omega);
  cert.witness.emplace_back("r_o", r_o);
  if (r_omega <= r_o) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  }
  return cert;
}

Certificate certify_omega(const Instance& inst) {
  Certificate cert{CertKind::omega_condition};
  DerivedVectors dv = derive_vectors(inst);
  ScaledCheck check = scaled_condition(inst, dv, 1.0);
  cert.witness.emplace_back("r_omega_star", check.aux_value);
  cert.witness.emplace_back("min_margin", check.min_margin);
  cert.witness_set = std::move(check.assortment);
  if (check.ok) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  }
  return cert;
}

Certificate certify_phi_min(const Instance& inst) {
  Certificate cert{CertKind::phi_min};
  DerivedVectors dv = derive_vectors(inst);
  double phi = std::numeric_limits<double>::infinity();
  double min_lambda = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dv.omega.size(); ++i) {
    phi = std::min(phi, dv.lambda[i] / (dv.omega[i] * (1.0 - dv.omega[i])));
    min_lambda = std::min(min_lambda, dv.lambda[i]);
  }
  cert.witness.emplace_back("phi_min", phi);
  cert.witness.emplace_back("min_lambda", min_lambda);
  if (min_lambda > 0.0)
    cert.witness.emplace_back("half_k_bound", 0.5 / min_lambda);
  if (phi >= 1.0) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  } else if (phi > 0.0) {
    cert.outcome = CertOutcome::holds_with_factor;
    cert.factor = 2.0 / phi;
  }
  return cert;
}

Certificate certify_alpha(const Instance& inst) {
  Certificate cert{CertKind::alpha_mnl};
  AlphaMnl as_alpha;
  if (const auto* a = std::get_if<AlphaMnl>(&inst.model)) {
    as_alpha = *a;
  } else if (const auto* g = std::get_if<Gam>(&inst.model)) {
    as_alpha = gam_to_alpha(*g);
  } else {
    as_alpha.base = std::get<Mnl>(inst.model);
    as_alpha.alpha.assign(inst.n(), 1.0);
  }
  double shortfall = 0.0;  // attraction mass of the damped products
  double min_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.n(); ++i) {
    if (as_alpha.alpha[i] < 1.0)
      shortfall += (1.0 - as_alpha.alpha[i]) * as_alpha.base.v[i];
    min_v = std::min(min_v, as_alpha.base.v[i]);
  }
  const double phi = (1.0 + min_v) / (1.0 + shortfall);
  cert.witness.emplace_back("phi", phi);
  cert.witness.emplace_back("shortfall", shortfall);
  if (phi >= 1.0) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  } else {
    cert.outcome = CertOutcome::holds_with_factor;
    cert.factor = 2.0 / phi;
  }
  return cert;
}

Certificate certify_nested(const Instance& inst) {
  Certificate cert{CertKind::nested_logit};
  const auto& m = std::get<NestedLogit>(inst.model);
  bool all_wide = true;
  for (double g : m.gamma) all_wide = all_wide && g >= 1.0;
  double min_margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int i = 0; i < m.nests() && ok; ++i) {
    double full = 0.0;
    for (double vij : m.v[i]) full += vij;
    for (double vij : m.v[i]) {
      // Worst case over offer sets is the full nest when gamma < 1; for
      // gamma >= 1 the right side is at most one and the check is free.
      const double lhs = (m.v0 + std::pow(vij, m.gamma[i])) / m.v0;
      const double rhs = std::pow(full / vij, 1.0 - m.gamma[i]);
      min_margin = std::min(min_margin, lhs - rhs);
      if (!(lhs >= rhs)) {
        ok = false;
        break;
      }
    }
  }
  cert.witness.emplace_back("all_gamma_ge_1", all_wide ? 1.0 : 0.0);
  cert.witness.emplace_back("min_margin", min_margin);
  if (all_wide || ok) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  }
  return cert;
}

Certificate certify_lc(const Instance& inst) {
  Certificate cert{CertKind::lc_mnl};
  const auto& m = std::get<LcMnl>(inst.model);
  DerivedVectors dv = derive_vectors(inst);
  MnlSolveResult aux = mnl_optimal(inst.revenues, dv.omega);

  // Per-segment no-purchase shares on S*_omega.
  std::vector<double> seg_none(m.segments());
  for (int j = 0; j < m.segments(); ++j) {
    double V = 0.0;
    for (int p : aux.assortment) V += m.v[j][p];
    seg_none[j] = 1.0 / (1.0 + V);
  }
  double min_margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int p : aux.assortment) {
    double margin = 0.0;
    for (int j = 0; j < m.segments(); ++j)
      margin += m.theta[j] * (m.v[j][p] - dv.omega[p]) * seg_none[j];
    min_margin = std::min(min_margin, margin);
    ok = ok && margin >= 0.0;
  }
  cert.witness.emplace_back("r_omega_star", aux.value);
  cert.witness.emplace_back("min_margin", min_margin);
  cert.witness_set = std::move(aux.assortment);
  if (ok) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  }
  return cert;
}

Certificate certify_lc_quick(const Instance& inst) {
  Certificate cert{CertKind::lc_quick_phi};
  const auto& m = std::get<LcMnl>(inst.model);
  DerivedVectors dv = derive_vectors(inst);
  double phi = std::numeric_limits<double>::infinity();
  for (int p = 0; p < inst.n(); ++p) {
    double v_low = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m.segments(); ++j) v_low = std::min(v_low, m.v[j][p]);
    phi = std::min(phi, v_low / dv.omega[p]);
  }
  cert.witness.emplace_back("phi", phi);
  if (phi >= 1.0) {
    cert.outcome = CertOutcome::holds;
    cert.factor = 2.0;
  } else {
    cert.outcome = CertOutcome::holds_with_factor;
    cert.factor = 2.0 / phi;
  }
  return cert;
}

Certificate certify_log_ratio(const Instance& inst) {
  Certificate cert{CertKind::log_ratio};
  const double spread = inst.revenues.front() / inst.revenues.back();
  cert.outcome = CertOutcome::holds_with_factor;
  cert.factor = 1.0 + std::log(spread);
  cert.witness.emplace_back("revenue_spread", spread);
  return cert;
}

}  // namespace

CertKind cert_kind_from_name(std::string_view name) {
  if (name == "ro") return CertKind::ro_condition;
  if (name == "omega") return CertKind::omega_condition;
  if (name == "phi") return CertKind::phi_search;
  if (name == "phi-min") return CertKind::phi_min;
  if (name == "alpha") return CertKind::alpha_mnl;
  if (name == "nl") return CertKind::nested_logit;
  if (name == "lc") return CertKind::lc_mnl;
  if (name == "lc-phi") return CertKind::lc_quick_phi;
  if (name == "log") return CertKind::log_ratio;
  throw std::invalid_argument("unknown certificate kind '" +
                              std::string(name) + "'");
}

std::string cert_kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::ro_condition: return "ro";
    case CertKind::omega_condition: return "omega";
    case CertKind::phi_search: return "phi";
    case CertKind::phi_min: return "phi-min";
    case CertKind::alpha_mnl: return "alpha";
    case CertKind::nested_logit: return "nl";
    case CertKind::lc_mnl: return "lc";
    case CertKind::lc_quick_phi: return "lc-phi";
    case CertKind::log_ratio: return "log";
  }
  return "?";
}

std::string cert_outcome_name(CertOutcome outcome) {
  switch (outcome) {
    case CertOutcome::holds: return "holds";
    case CertOutcome::holds_with_factor: return "holds-with-factor";
    case CertOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

Certificate certify(const Instance& inst, CertKind kind) {
  if (!kind_applicable(kind, inst.model))
    throw std::invalid_argument("certificate '" + cert_kind_name(kind) +
                                "' does not apply to model kind '" +
                                model_kind(inst.model) + "'");
  Certificate cert;
  switch (kind) {
    case CertKind::ro_condition: cert = certify_ro(inst); break;
    case CertKind::omega_condition: cert = certify_omega(inst); break;
    case CertKind::phi_search: cert = phi_search(inst).cert; break;
    case CertKind::phi_min: cert = certify_phi_min(inst); break;
    case CertKind::alpha_mnl: cert = certify_alpha(inst); break;
    case CertKind::nested_logit: cert = certify_nested(inst); break;
    case CertKind::lc_mnl: cert = certify_lc(inst); break;
    case CertKind::lc_quick_phi: cert = certify_lc_quick(inst); break;
    case CertKind::log_ratio: cert = certify_log_ratio(inst); break;
  }
  verify_factor(inst, cert);
  return cert;
}

PhiSearchResult phi_search(const Instance& inst, double grid_step,
                           double refine_tol) {
  if (!(grid_step > 0.0 && grid_step <= 1.0))
    throw std::invalid_argument("phi grid step must lie in (0, 1]");
  DerivedVectors dv = derive_vectors(inst);

  PhiSearchResult out;
  out.cert.kind = CertKind::phi_search;

  double found = 0.0;
  ScaledCheck at_found;
  const int steps = static_cast<int>(std::lround(1.0 / grid_step));
  for (int s = steps; s >= 1; --s) {
    const double phi = s * grid_step;
    ScaledCheck check = scaled_condition(inst, dv, phi);
    if (check.ok) {
      found = phi;
      at_found = std::move(check);
      break;
    }
  }
  if (found == 0.0) {
    out.cert.witness.emplace_back("phi", 0.0);
    return out;  // inconclusive: no grid point satisfies the condition
  }

  if (found < 1.0) {
    // The active assortment jumps with phi, so the condition need not be
    // monotone; bisection inside the bracketing step keeps whichever
    // passing phi it can certify.
    double lo = found;
    double hi = std::min(1.0, found + grid_step);
    while (hi - lo > refine_tol) {
      const double mid = 0.5 * (lo + hi);
      ScaledCheck check = scaled_condition(inst, dv, mid);
      if (check.ok) {
        lo = mid;
        at_found = std::move(check);
      } else {
        hi = mid;
      }
    }
    found = lo;
  }

  out.phi = found;
  out.cert.outcome =
      found >= 1.0 ? CertOutcome::holds : CertOutcome::holds_with_factor;
  out.cert.factor = 2.0 / found;
  out.cert.witness.emplace_back("phi", found);
  out.cert.witness.emplace_back("min_margin", at_found.min_margin);
  out.cert.witness.emplace_back("aux_value", at_found.aux_value);
  out.cert.witness_set = std::move(at_found.assortment);
  return out;
}

MarkovFixture markov_tight_fixture(int n, double eps) {
  if (n < 2) throw std::invalid_argument("fixture needs n >= 2");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("fixture needs eps in (0, 1)");

  // Last-choice probabilities omega_i = eps^(n-i) (1 - eps^i) increase in
  // i, revenues r_i = omega_1 / omega_i decrease, and every assortment
  // earns exactly omega_1 because only its most preferred (cheapest)
  // member can sell.
  std::vector<double> omega(n), r(n);
  for (int i = 1; i <= n; ++i) {
    omega[i - 1] = std::pow(eps, n - i) * (1.0 - std::pow(eps, i));
    r[i - 1] = std::pow(eps, i - 1) * (1.0 - eps) / (1.0 - std::pow(eps, i));
  }

  MarkovChain chain;
  chain.arrival.assign(n + 1, 0.0);
  chain.arrival[n] = omega[n - 1];
  chain.arrival[0] = 1.0 - omega[n - 1];
  chain.rho.assign(n + 1, std::vector<double>(n + 1, 0.0));
  chain.rho[0][0] = 1.0;
  chain.rho[1][0] = 1.0;
  for (int state = 2; state <= n; ++state) {
    const double down = omega[state - 2] / omega[state - 1];
    chain.rho[state][state - 1] = down;
    chain.rho[state][0] = 1.0 - down;
  }

  MarkovFixture fix;
  fix.instance = make_instance(r, chain);

  fix.r_star = omega[0];
  fix.ratio = 0.0;
  for (int i = 1; i <= n; ++i)
    fix.ratio += (1.0 - eps) / (1.0 - std::pow(eps, i));
  fix.r_bar = fix.r_star * fix.ratio;

  // Re-derive everything through the absorption solver as a cross-check.
  std::vector<double> omega_hat(n);
  for (int p = 0; p < n; ++p) {
    const int single[1] = {p};
    omega_hat[p] = choice_distribution(fix.instance, single).prob[0];
  }
  fix.r_star_model = revenue_ordered(fix.instance).revenue;
  fix.clairvoyant.method = ClairvoyantMethod::exact_markov_fixture;
  fix.clairvoyant.sale_prob.assign(n, 0.0);
  double prev = 0.0;
  for (int p = 0; p < n; ++p) {
    // The acceptable set is always a suffix of the walk, so the sale
    // probabilities are successive differences of omega.
    fix.clairvoyant.sale_prob[p] = omega_hat[p] - prev;
    fix.r_bar_model += r[p] * fix.clairvoyant.sale_prob[p];
    prev = omega_hat[p];
  }
  fix.clairvoyant.no_sale = 1.0 - omega_hat[n - 1];
  fix.clairvoyant.value = fix.r_bar_model;
  fix.ratio_model = fix.r_bar_model / fix.r_star_model;
  return fix;
}

}  // namespace assort
