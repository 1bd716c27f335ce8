#pragma once

#include <string>

#include <json.hpp>

#include "assort/model.hpp"

namespace assort {

// Instance schema:
//   {"revenues": [...], "model": {"kind": "...", ...kind fields}}
// Kinds and their fields (product ids in JSON are 1-based):
//   mnl:          v
//   lcmnl:        theta, v (rows = products, columns = segments)
//   alpha_mnl:    alpha, base {v}
//   gam:          v, w
//   nested_logit: m, gamma, v (rows = nests), v0
//   markov:       lambda_arrival (index 0 = no purchase), rho ((n+1)^2)
//   rcs:          attention, preference (most preferred first)
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

// Reads and validates an instance file; throws std::invalid_argument with
// the offending detail on malformed input.
Instance load_instance(const std::string& path);

// Shortest decimal that round-trips the double; used wherever output must
// be byte-deterministic.
std::string format_full(double x);

// Six significant digits for human-facing text.
std::string format_sig6(double x);

}  // namespace assort
