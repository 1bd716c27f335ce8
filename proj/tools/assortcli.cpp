// Command-line front end: solvers, bound chains, prophet-style
// certificates, personalization benchmarks, pricing, and the seeded
// experiment runners, all over the JSON instance format.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "assort/bounds.hpp"
#include "assort/certify.hpp"
#include "assort/clairvoyant.hpp"
#include "assort/experiments.hpp"
#include "assort/io.hpp"
#include "assort/personalization.hpp"
#include "assort/pricing.hpp"
#include "assort/solver.hpp"

namespace {

using assort::format_sig6;
using nlohmann::json;

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i] + 1);  // products print 1-based
  }
  return out + "}";
}

json set_json(const std::vector<int>& s) {
  json arr = json::array();
  for (int p : s) arr.push_back(p + 1);
  return arr;
}

struct Output {
  bool as_json = false;
  json payload;

  void line(const std::string& text) {
    if (!as_json) std::cout << text << "\n";
  }
  void flush() {
    if (as_json) std::cout << payload.dump(2) << "\n";
  }
};

void run_solve(const assort::Instance& inst, const std::string& method, int k,
               Output& out) {
  assort::SolveResult res;
  if (method == "brute") {
    res = assort::brute_force_taop(inst);
  } else if (method == "revenue-ordered") {
    res = assort::revenue_ordered(inst);
  } else if (method == "mnl") {
    const auto* m = std::get_if<assort::Mnl>(&inst.model);
    if (!m)
      throw std::invalid_argument("--method mnl needs an mnl instance");
    assort::MnlSolveResult fp = assort::mnl_optimal(inst.revenues, m->v);
    res = {fp.assortment, fp.value, "mnl"};
  } else if (method == "constrained") {
    if (k < 0) throw std::invalid_argument("--method constrained needs --k");
    res = assort::brute_force_constrained(
        inst,
        [k](std::span<const int> s) { return static_cast<int>(s.size()) <= k; });
    res.method = "constrained-brute";
  } else {
    throw std::invalid_argument("unknown solve method '" + method + "'");
  }
  out.line("method:     " + res.method);
  out.line("revenue:    " + format_sig6(res.revenue));
  out.line("assortment: " + set_text(res.assortment));
  out.payload = {{"method", res.method},
                 {"revenue", res.revenue},
                 {"assortment", set_json(res.assortment)}};
}

void run_bounds(const assort::Instance& inst, bool exact, Output& out) {
  assort::BoundChain chain = assort::bound_chain(inst, exact);
  auto emit = [&](const char* name, const assort::BoundValue& b) {
    out.line(std::string(name) + " = " + format_sig6(b.value) + "  at " +
             set_text(b.assortment));
    out.payload[name] = {{"value", b.value},
                         {"assortment", set_json(b.assortment)}};
  };
  emit("r_lambda", chain.r_lambda);
  emit("r_a", chain.r_a);
  emit("r_o", chain.r_o);
  if (chain.r_star) emit("r_star", *chain.r_star);
  emit("r_b", chain.r_b);
  emit("r_omega_over_lambda0", chain.r_omega_over_lambda0);
  out.payload["lambda0"] = chain.vectors.lambda0;
}

void run_constrained(const assort::Instance& inst, int k, bool exact,
                     Output& out) {
  if (k < 1) throw std::invalid_argument("constrained needs --k >= 1");
  assort::HeuristicReport rep = assort::heuristic_suite(inst, k, exact);
  auto emit = [&](const char* name, const assort::HeuristicValue& h) {
    out.line(std::string(name) + ": revenue " + format_sig6(h.revenue) +
             "  at " + set_text(h.assortment));
    out.payload[name] = {{"revenue", h.revenue},
                         {"assortment", set_json(h.assortment)}};
  };
  emit("S_k_lambda", rep.by_lambda);
  emit("S_k_a", rep.by_a);
  emit("S_k_omega", rep.by_omega);
  emit("S_k_b", rep.by_b);
  out.line("max_h:      " + format_sig6(rep.max_h));
  out.payload["max_h"] = rep.max_h;
  if (rep.baseline) {
    out.line("baseline:   " + format_sig6(*rep.baseline));
    out.payload["baseline"] = *rep.baseline;
  }
  if (rep.optimum) {
    out.line("optimum:    " + format_sig6(*rep.optimum));
    out.payload["optimum"] = *rep.optimum;
  }
  if (rep.cop) {
    out.line("cop:        " + format_sig6(*rep.cop));
    out.payload["cop"] = *rep.cop;
  } else {
    out.line("cop:        undefined");
  }
  out.line("r_k_a:      " + format_sig6(rep.bounds.r_k_a));
  out.line("r_k_b:      " + format_sig6(rep.bounds.r_k_b));
  out.line("guarantee:  " + format_sig6(rep.bounds.guarantee));
  out.payload["r_k_a"] = rep.bounds.r_k_a;
  out.payload["r_k_b"] = rep.bounds.r_k_b;
  out.payload["guarantee"] = rep.bounds.guarantee;
}

void run_clairvoyant(const assort::Instance& inst, bool force_mc,
                     std::int64_t samples, std::uint64_t seed, Output& out) {
  assort::ClairvoyantResult res;
  if (!force_mc && assort::clairvoyant_exact_supported(inst.model))
    res = assort::clairvoyant_exact(inst);
  else
    res = assort::clairvoyant_mc(inst, samples, seed);
  out.line("method:    " + assort::clairvoyant_method_name(res.method));
  out.line("r_bar:     " + format_sig6(res.value));
  out.payload = {{"method", assort::clairvoyant_method_name(res.method)},
                 {"r_bar", res.value}};
  if (res.method == assort::ClairvoyantMethod::monte_carlo) {
    out.line("std_error: " + format_sig6(res.std_error));
    out.payload["std_error"] = res.std_error;
  }
  assort::DerivedVectors dv = assort::derive_vectors(inst);
  const double cap = assort::lai_robbins_min(dv.omega, inst.revenues);
  const double r_o = assort::revenue_ordered(inst).revenue;
  out.line("2R*_omega: " + format_sig6(cap));
  out.line("r_o:       " + format_sig6(r_o));
  out.payload["two_r_omega_star"] = cap;
  out.payload["r_o"] = r_o;
}

void run_certify(const assort::Instance& inst, const std::string& kind_name,
                 Output& out) {
  assort::Certificate cert =
      assort::certify(inst, assort::cert_kind_from_name(kind_name));
  out.line("kind:    " + assort::cert_kind_name(cert.kind));
  out.line("outcome: " + assort::cert_outcome_name(cert.outcome));
  out.payload = {{"kind", assort::cert_kind_name(cert.kind)},
                 {"outcome", assort::cert_outcome_name(cert.outcome)}};
  if (cert.outcome != assort::CertOutcome::inconclusive) {
    out.line("factor:  " + format_sig6(cert.factor));
    out.payload["factor"] = cert.factor;
  }
  json witness = json::object();
  for (const auto& [name, value] : cert.witness) {
    out.line("  " + name + " = " + format_sig6(value));
    witness[name] = value;
  }
  out.payload["witness"] = witness;
  if (!cert.witness_set.empty()) {
    out.line("  checked on " + set_text(cert.witness_set));
    out.payload["witness_set"] = set_json(cert.witness_set);
  }
}

void run_personalize(const assort::Instance& inst, int k, Output& out) {
  const double p = assort::ptaop(inst);
  out.line("ptaop: " + format_sig6(p));
  out.payload["ptaop"] = p;
  if (assort::clairvoyant_exact_supported(inst.model)) {
    const double bar = assort::clairvoyant_exact(inst).value;
    out.line("r_bar: " + format_sig6(bar));
    out.payload["r_bar"] = bar;
  }
  if (k >= 0) {
    assort::CapResult cap = assort::cap_brute(inst, k);
    assort::CapResult ccap = assort::clairvoyant_cap_brute(inst, k);
    out.line("cap:             " + format_sig6(cap.value) + "  T = " +
             set_text(cap.first_stage));
    out.line("clairvoyant-cap: " + format_sig6(ccap.value) + "  T = " +
             set_text(ccap.first_stage));
    out.payload["cap"] = {{"value", cap.value},
                          {"first_stage", set_json(cap.first_stage)}};
    out.payload["clairvoyant_cap"] = {
        {"value", ccap.value}, {"first_stage", set_json(ccap.first_stage)}};
  }
}

void run_pricing(std::optional<double> V, std::optional<double> a,
                 const std::string& instance_path, Output& out) {
  if (!V && !a && !instance_path.empty()) {
    assort::Instance inst = assort::load_instance(instance_path);
    const auto* m = std::get_if<assort::Mnl>(&inst.model);
    if (!m)
      throw std::invalid_argument("pricing --instance needs an mnl model");
    double total = 0.0;
    for (double vi : m->v) total += vi;
    V = total;
  }
  if (V) {
    assort::PricingResult res = assort::mnl_pricing(*V);
    out.line("V:             " + format_sig6(*V));
    out.line("p_star:        " + format_sig6(res.p_star));
    out.line("r_star:        " + format_sig6(res.r_star));
    out.line("r_clairvoyant: " + format_sig6(res.r_clairvoyant));
    out.line("ratio:         " + format_sig6(res.ratio));
    out.payload["uniform_price"] = {{"V", *V},
                                    {"p_star", res.p_star},
                                    {"r_star", res.r_star},
                                    {"r_clairvoyant", res.r_clairvoyant},
                                    {"ratio", res.ratio}};
  }
  if (a) {
    assort::UnboundedPricingExample ex = assort::unbounded_example(*a);
    out.line("single-product tail a = " + format_sig6(*a) + ": ratio " +
             format_sig6(ex.ratio));
    out.payload["unbounded_example"] = {{"a", *a},
                                        {"r_clairvoyant", ex.r_clairvoyant},
                                        {"r_star", ex.r_star},
                                        {"ratio", ex.ratio}};
  }
  if (!V && !a)
    throw std::invalid_argument("pricing needs --V, --a, or --instance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assortment optimization bounds, heuristics, and clairvoyant "
               "benchmarks"};
  app.require_subcommand(1);

  std::string instance_path, method = "brute", kind = "omega", csv_path;
  std::string config_path;
  int k = -1;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  bool as_json = false, exact = false, force_mc = false;
  std::optional<double> price_v, price_a;
  std::vector<int> n_list{10}, m_list{4};
  int count = 30, threads = 1;
  double beta = 1.0;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "instance JSON file")
        ->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "maximize expected revenue");
  add_instance(solve);
  solve->add_option("--method", method,
                    "brute | revenue-ordered | mnl | constrained");
  solve->add_option("--k", k, "cardinality cap for --method constrained");
  solve->add_flag("--json", as_json);

  CLI::App* bounds =
      app.add_subcommand("bounds", "auxiliary-MNL bound chain");
  add_instance(bounds);
  bounds->add_flag("--exact", exact, "include the brute-force optimum");
  bounds->add_flag("--json", as_json);

  CLI::App* constrained = app.add_subcommand(
      "constrained", "cardinality heuristics, bounds, and guarantee");
  add_instance(constrained);
  constrained->add_option("--k", k, "cardinality cap")->required();
  constrained->add_flag("--exact", exact, "include the brute-force optimum");
  constrained->add_flag("--json", as_json);

  CLI::App* clair =
      app.add_subcommand("clairvoyant", "clairvoyant expected revenue");
  add_instance(clair);
  clair->add_flag("--mc", force_mc, "force Monte Carlo even if exact exists");
  clair->add_option("--samples", samples);
  clair->add_option("--seed", seed);
  clair->add_flag("--json", as_json);

  CLI::App* certify =
      app.add_subcommand("certify", "prophet-style factor certificates");
  add_instance(certify);
  certify
      ->add_option("--kind", kind,
                   "ro | omega | phi | phi-min | alpha | nl | lc | lc-phi | log")
      ->required();
  certify->add_flag("--json", as_json);

  CLI::App* personalize = app.add_subcommand(
      "personalize", "per-segment and two-stage personalization values");
  add_instance(personalize);
  personalize->add_option("--k", k, "first-stage budget for the two-stage run");
  personalize->add_flag("--json", as_json);

  CLI::App* pricing =
      app.add_subcommand("pricing", "uniform-price vs clairvoyant pricing");
  pricing->add_option("--V", price_v, "total attraction at zero prices");
  pricing->add_option("--a", price_a, "tail length of the unbounded example");
  pricing->add_option("--instance", instance_path,
                      "mnl instance supplying V(N)");
  pricing->add_flag("--json", as_json);

  CLI::App* experiment =
      app.add_subcommand("experiment", "seeded experiment runners");
  experiment->require_subcommand(1);
  CLI::App* beta_cmd = experiment->add_subcommand(
      "beta", "revenue-ordered vs optimal vs personalized vs clairvoyant");
  CLI::App* card_cmd = experiment->add_subcommand(
      "cardinality", "constrained heuristic quality study");
  for (CLI::App* cmd : {beta_cmd, card_cmd}) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--n", n_list, "product counts");
    cmd->add_option("--m", m_list, "segment counts");
    cmd->add_option("--count", count, "instances per (n, m) cell");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--threads", threads, "workers (0 = hardware)");
    cmd->add_option("--csv", csv_path, "write per-instance rows as CSV");
    cmd->add_flag("--json", as_json);
  }
  beta_cmd->add_option("--beta", beta, "noise scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw std::invalid_argument("cannot open config file: " + config_path);
      json cfg = json::parse(in);
      if (cfg.contains("n_list")) n_list = cfg["n_list"].get<std::vector<int>>();
      if (cfg.contains("m_list")) m_list = cfg["m_list"].get<std::vector<int>>();
      if (cfg.contains("beta")) beta = cfg["beta"].get<double>();
      if (cfg.contains("instances")) count = cfg["instances"].get<int>();
      if (cfg.contains("seed")) seed = cfg["seed"].get<std::uint64_t>();
    }

    if (solve->parsed() || bounds->parsed() || constrained->parsed() ||
        clair->parsed() || certify->parsed() || personalize->parsed()) {
      assort::Instance inst = assort::load_instance(instance_path);
      out.as_json = as_json;
      if (solve->parsed()) run_solve(inst, method, k, out);
      if (bounds->parsed()) run_bounds(inst, exact, out);
      if (constrained->parsed()) run_constrained(inst, k, exact, out);
      if (clair->parsed()) run_clairvoyant(inst, force_mc, samples, seed, out);
      if (certify->parsed()) run_certify(inst, kind, out);
      if (personalize->parsed()) run_personalize(inst, k, out);
    } else if (pricing->parsed()) {
      out.as_json = as_json;
      run_pricing(price_v, price_a, instance_path, out);
    } else if (beta_cmd->parsed()) {
      out.as_json = as_json;
      assort::BetaScenarioConfig cfg{n_list, m_list, beta, count, seed,
                                     threads};
      assort::ScenarioReport rep = assort::run_beta_scenario(cfg);
      if (!csv_path.empty()) assort::emit_csv(assort::scenario_csv(rep), csv_path);
      for (const assort::BetaCell& cell : rep.cells) {
        out.line("n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m) +
                 "  taop% avg " + format_sig6(cell.avg_taop_pct) + " max " +
                 format_sig6(cell.max_taop_pct) + " | ptaop% avg " +
                 format_sig6(cell.avg_ptaop_pct) + " max " +
                 format_sig6(cell.max_ptaop_pct) + " | clairvoyant% avg " +
                 format_sig6(cell.avg_clairvoyant_pct) + " max " +
                 format_sig6(cell.max_clairvoyant_pct) + " | certified " +
                 format_sig6(100.0 * cell.cert_fraction) + "%");
        out.payload["cells"].push_back(
            {{"n", cell.n},
             {"m", cell.m},
             {"avg_taop_pct", cell.avg_taop_pct},
             {"max_taop_pct", cell.max_taop_pct},
             {"avg_ptaop_pct", cell.avg_ptaop_pct},
             {"max_ptaop_pct", cell.max_ptaop_pct},
             {"avg_clairvoyant_pct", cell.avg_clairvoyant_pct},
             {"max_clairvoyant_pct", cell.max_clairvoyant_pct},
             {"cert_fraction", cell.cert_fraction}});
      }
      out.line("max clairvoyant% anywhere: " +
               format_sig6(rep.max_clairvoyant_pct));
      out.payload["max_clairvoyant_pct"] = rep.max_clairvoyant_pct;
    } else if (card_cmd->parsed()) {
      out.as_json = as_json;
      assort::CardinalityConfig cfg{n_list, m_list, count, seed, threads};
      assort::CardinalityReport rep = assort::run_cardinality_experiment(cfg);
      if (!csv_path.empty())
        assort::emit_csv(assort::cardinality_csv(rep), csv_path);
      for (const assort::CardCell& cell : rep.cells) {
        out.line("n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m) +
                 " k=" + std::to_string(cell.k) + "  avg ratios: lambda " +
                 format_sig6(cell.avg_lambda) + ", a " + format_sig6(cell.avg_a) +
                 ", omega " + format_sig6(cell.avg_omega) + ", b " +
                 format_sig6(cell.avg_b) + ", max-h " +
                 format_sig6(cell.avg_maxh) + ", cop " +
                 (cell.cop_count ? format_sig6(cell.avg_cop) : "n/a") +
                 " (" + std::to_string(cell.cop_count) + "), guarantee " +
                 format_sig6(cell.avg_guarantee));
        out.payload["cells"].push_back(
            {{"n", cell.n},
             {"m", cell.m},
             {"k", cell.k},
             {"avg_lambda", cell.avg_lambda},
             {"avg_a", cell.avg_a},
             {"avg_omega", cell.avg_omega},
             {"avg_b", cell.avg_b},
             {"avg_maxh", cell.avg_maxh},
             {"avg_cop", cell.avg_cop},
             {"cop_count", cell.cop_count},
             {"avg_guarantee", cell.avg_guarantee}});
      }
    }
    out.flush();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
