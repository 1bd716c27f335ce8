#include "assort/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace assort {
namespace {

using nlohmann::json;

std::vector<double> doubles(const json& j, const char* field) {
  if (!j.contains(field))
    throw std::invalid_argument(std::string("missing field '") + field + "'");
  return j.at(field).get<std::vector<double>>();
}

std::vector<std::vector<double>> matrix(const json& j, const char* field) {
  if (!j.contains(field))
    throw std::invalid_argument(std::string("missing field '") + field + "'");
  return j.at(field).get<std::vector<std::vector<double>>>();
}

ChoiceModel model_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mnl") return Mnl{doubles(j, "v")};
  if (kind == "lcmnl") {
    LcMnl m;
    m.theta = doubles(j, "theta");
    // JSON rows are products, columns are segments; stored per segment.
    auto rows = matrix(j, "v");
    m.v.assign(m.theta.size(), std::vector<double>(rows.size(), 0.0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.theta.size())
        throw std::invalid_argument(
            "lcmnl attraction row width must equal the segment count");
      for (std::size_t s = 0; s < rows[i].size(); ++s) m.v[s][i] = rows[i][s];
    }
    return m;
  }
  if (kind == "alpha_mnl") {
    AlphaMnl m;
    m.alpha = doubles(j, "alpha");
    m.base.v = doubles(j.at("base"), "v");
    return m;
  }
  if (kind == "gam") return Gam{doubles(j, "v"), doubles(j, "w")};
  if (kind == "nested_logit") {
    NestedLogit m;
    m.gamma = doubles(j, "gamma");
    m.v = matrix(j, "v");
    m.v0 = j.at("v0").get<double>();
    if (j.contains("m") && j.at("m").get<int>() != m.nests())
      throw std::invalid_argument("nested_logit nest count does not match v");
    return m;
  }
  if (kind == "markov") {
    MarkovChain m;
    m.arrival = doubles(j, "lambda_arrival");
    m.rho = matrix(j, "rho");
    return m;
  }
  if (kind == "rcs") {
    Rcs m;
    m.attention = doubles(j, "attention");
    for (int p : j.at("preference").get<std::vector<int>>())
      m.preference.push_back(p - 1);  // 1-based in JSON
    return m;
  }
  throw std::invalid_argument("unknown model kind '" + kind + "'");
}

json model_to_json(const ChoiceModel& model) {
  json j;
  j["kind"] = model_kind(model);
  if (const auto* m = std::get_if<Mnl>(&model)) {
    j["v"] = m->v;
  } else if (const auto* m = std::get_if<LcMnl>(&model)) {
    j["theta"] = m->theta;
    const std::size_t n = m->v.front().size();
    std::vector<std::vector<double>> rows(n,
                                          std::vector<double>(m->v.size()));
    for (std::size_t s = 0; s < m->v.size(); ++s)
      for (std::size_t i = 0; i < n; ++i) rows[i][s] = m->v[s][i];
    j["v"] = rows;
  } else if (const auto* m = std::get_if<AlphaMnl>(&model)) {
    j["alpha"] = m->alpha;
    j["base"] = json{{"v", m->base.v}};
  } else if (const auto* m = std::get_if<Gam>(&model)) {
    j["v"] = m->v;
    j["w"] = m->w;
  } else if (const auto* m = std::get_if<NestedLogit>(&model)) {
    j["m"] = m->nests();
    j["gamma"] = m->gamma;
    j["v"] = m->v;
    j["v0"] = m->v0;
  } else if (const auto* m = std::get_if<MarkovChain>(&model)) {
    j["lambda_arrival"] = m->arrival;
    j["rho"] = m->rho;
  } else if (const auto* m = std::get_if<Rcs>(&model)) {
    j["attention"] = m->attention;
    std::vector<int> pref;
    for (int p : m->preference) pref.push_back(p + 1);
    j["preference"] = pref;
  } else {
    throw std::invalid_argument("sampler_rum cannot be serialized");
  }
  return j;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.contains("revenues") || !j.contains("model"))
    throw std::invalid_argument(
        "instance needs 'revenues' and 'model' fields");
  return make_instance(j.at("revenues").get<std::vector<double>>(),
                       model_from_json(j.at("model")));
}

json instance_to_json(const Instance& inst) {
  json j;
  j["revenues"] = inst.revenues;
  j["model"] = model_to_json(inst.model);
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("instance file is not valid JSON: " +
                                std::string(e.what()));
  }
  return instance_from_json(j);
}

std::string format_full(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_sig6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace assort
