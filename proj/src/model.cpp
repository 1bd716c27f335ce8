#include "assort/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace assort {
namespace {

constexpr double kSumTol = 1e-12;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void check_dim(const char* what, std::size_t got, int n) {
  if (static_cast<int>(got) != n) {
    std::ostringstream os;
    os << what << " has dimension " << got << ", expected " << n;
    fail(os.str());
  }
}

void check_positive(const char* what, const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i])) {
      std::ostringstream os;
      os << what << "[" << i + 1 << "] = " << x[i] << " must be positive";
      fail(os.str());
    }
  }
}

void check_distribution(const char* what, const std::vector<double>& x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || !std::isfinite(x[i])) {
      std::ostringstream os;
      os << what << "[" << i << "] = " << x[i] << " must be non-negative";
      fail(os.str());
    }
    sum += x[i];
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    std::ostringstream os;
    os << what << " sums to " << sum << ", expected 1";
    fail(os.str());
  }
}

struct DimVisitor {
  int operator()(const Mnl& m) const { return static_cast<int>(m.v.size()); }
  int operator()(const LcMnl& m) const {
    return m.v.empty() ? 0 : static_cast<int>(m.v.front().size());
  }
  int operator()(const AlphaMnl& m) const {
    return static_cast<int>(m.base.v.size());
  }
  int operator()(const Gam& m) const { return static_cast<int>(m.v.size()); }
  int operator()(const NestedLogit& m) const { return m.total_products(); }
  int operator()(const MarkovChain& m) const {
    return static_cast<int>(m.arrival.size()) - 1;
  }
  int operator()(const Rcs& m) const {
    return static_cast<int>(m.attention.size());
  }
  int operator()(const SamplerRum& m) const { return m.n; }
};

struct KindVisitor {
  std::string operator()(const Mnl&) const { return "mnl"; }
  std::string operator()(const LcMnl&) const { return "lcmnl"; }
  std::string operator()(const AlphaMnl&) const { return "alpha_mnl"; }
  std::string operator()(const Gam&) const { return "gam"; }
  std::string operator()(const NestedLogit&) const { return "nested_logit"; }
  std::string operator()(const MarkovChain&) const { return "markov"; }
  std::string operator()(const Rcs&) const { return "rcs"; }
  std::string operator()(const SamplerRum&) const { return "sampler_rum"; }
};

void validate(const Mnl& m, int n) {
  check_dim("mnl attraction vector v", m.v.size(), n);
  check_positive("v", m.v);
}

void validate(const LcMnl& m, int n) {
  if (m.theta.empty()) fail("lcmnl needs at least one segment");
  check_dim("lcmnl attraction matrix v", m.v.size(), m.segments());
  check_positive("theta", m.theta);
  double sum = 0.0;
  for (double t : m.theta) sum += t;
  if (std::abs(sum - 1.0) > kSumTol) {
    std::ostringstream os;
    os << "lcmnl segment weights sum to " << sum << ", expected 1";
    fail(os.str());
  }
  for (std::size_t j = 0; j < m.v.size(); ++j) {
    check_dim("lcmnl segment attraction vector", m.v[j].size(), n);
    check_positive("v", m.v[j]);
  }
}

void validate(const AlphaMnl& m, int n) {
  check_dim("alpha_mnl alpha", m.alpha.size(), n);
  validate(m.base, n);
  double load = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(m.alpha[i] >= 0.0) || !std::isfinite(m.alpha[i])) {
      std::ostringstream os;
      os << "alpha[" << i + 1 << "] = " << m.alpha[i]
         << " must be non-negative";
      fail(os.str());
    }
    if (m.alpha[i] > 1.0) load += (m.alpha[i] - 1.0) * m.base.v[i];
  }
  if (load > 1.0 + kSumTol) {
    std::ostringstream os;
    os << "alpha_mnl infeasible: sum (alpha_i - 1)^+ v_i = " << load
       << " exceeds 1";
    fail(os.str());
  }
}

void validate(const Gam& m, int n) {
  check_dim("gam attraction vector v", m.v.size(), n);
  check_dim("gam shadow vector w", m.w.size(), n);
  check_positive("v", m.v);
  for (int i = 0; i < n; ++i) {
    if (!(m.w[i] >= 0.0) || !(m.w[i] < m.v[i])) {
      std::ostringstream os;
      os << "gam requires 0 <= w_i < v_i, got w[" << i + 1 << "] = " << m.w[i]
         << " with v[" << i + 1 << "] = " << m.v[i];
      fail(os.str());
    }
  }
}

void validate(const NestedLogit& m, int n) {
  if (m.nests() == 0) fail("nested_logit needs at least one nest");
  check_dim("nested_logit gamma", m.gamma.size(), m.nests());
  check_positive("gamma", m.gamma);
  if (!(m.v0 > 0.0) || !std::isfinite(m.v0))
    fail("nested_logit v0 must be positive");
  for (const auto& nest : m.v) check_positive("nest attraction", nest);
  if (m.total_products() != n) {
    std::ostringstream os;
    os << "nested_logit flattens to " << m.total_products()
       << " products, expected " << n;
    fail(os.str());
  }
}

void validate(const MarkovChain& m, int n) {
  if (n > 25) fail("markov model limited to n <= 25 for the dense solve");
  check_dim("markov arrival distribution", m.arrival.size(), n + 1);
  check_distribution("markov arrival distribution", m.arrival);
  check_dim("markov transition matrix", m.rho.size(), n + 1);
  for (int s = 0; s <= n; ++s) {
    check_dim("markov transition row", m.rho[s].size(), n + 1);
    std::ostringstream name;
    name << "markov transition row " << s;
    check_distribution(name.str().c_str(), m.rho[s]);
  }
  if (std::abs(m.rho[0][0] - 1.0) > kSumTol)
    fail("markov no-purchase state must be absorbing (rho[0][0] = 1)");
}

void validate(const Rcs& m, int n) {
  check_dim("rcs attention vector", m.attention.size(), n);
  for (int i = 0; i < n; ++i) {
    if (!(m.attention[i] > 0.0) || !(m.attention[i] < 1.0)) {
      std::ostringstream os;
      os << "rcs attention[" << i + 1 << "] = " << m.attention[i]
         << " must lie in (0,1)";
      fail(os.str());
    }
  }
  check_dim("rcs preference order", m.preference.size(), n);
  std::vector<char> seen(n, 0);
  for (int p : m.preference) {
    if (p < 0 || p >= n || seen[p]) fail("rcs preference must be a permutation of the products");
    seen[p] = 1;
  }
}

void validate(const SamplerRum& m, int n) {
  check_dim("sampler_rum", static_cast<std::size_t>(m.n), n);
  if (!m.sample) fail("sampler_rum needs a sampling procedure");
}

}  // namespace

int model_dimension(const ChoiceModel& model) {
  return std::visit(DimVisitor{}, model);
}

std::string model_kind(const ChoiceModel& model) {
  return std::visit(KindVisitor{}, model);
}

ChoiceModel validate_model(ChoiceModel model, int n) {
  if (n <= 0) fail("instance needs at least one product");
  if (model_dimension(model) != n) {
    std::ostringstream os;
    os << "model dimension " << model_dimension(model)
       << " does not match product count " << n;
    fail(os.str());
  }
  std::visit([n](const auto& m) { validate(m, n); }, model);
  return model;
}

Instance make_instance(std::vector<double> revenues, ChoiceModel model) {
  const int n = static_cast<int>(revenues.size());
  for (int i = 0; i < n; ++i) {
    if (!(revenues[i] > 0.0) || !std::isfinite(revenues[i])) {
      std::ostringstream os;
      os << "revenues[" << i + 1 << "] = " << revenues[i]
         << " must be positive";
      fail(os.str());
    }
    if (i > 0 && revenues[i] > revenues[i - 1]) {
      std::ostringstream os;
      os << "revenues must be non-increasing, violated at position " << i + 1;
      fail(os.str());
    }
  }
  ChoiceModel checked = validate_model(std::move(model), n);
  return Instance{std::move(revenues), std::move(checked)};
}

}  // namespace assort
