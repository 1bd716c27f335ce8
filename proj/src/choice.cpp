#include "assort/choice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace assort {
namespace {

void check_assortment(std::span<const int> s, int n) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] >= n)
      throw std::invalid_argument("assortment contains an unknown product id");
    if (k > 0 && s[k] <= s[k - 1])
      throw std::invalid_argument(
          "assortment must be sorted with distinct product ids");
  }
}

ChoiceDist mnl_dist(const std::vector<double>& v, std::span<const int> s) {
  double V = 0.0;
  for (int p : s) V += v[p];
  const double denom = 1.0 + V;
  ChoiceDist d;
  d.prob.reserve(s.size());
  for (int p : s) d.prob.push_back(v[p] / denom);
  d.no_purchase = 1.0 / denom;
  return d;
}

ChoiceDist dist(const Mnl& m, std::span<const int> s,
                const std::vector<double>&) {
  return mnl_dist(m.v, s);
}

ChoiceDist dist(const LcMnl& m, std::span<const int> s,
                const std::vector<double>&) {
  ChoiceDist d;
  d.prob.assign(s.size(), 0.0);
  for (int j = 0; j < m.segments(); ++j) {
    ChoiceDist seg = mnl_dist(m.v[j], s);
    for (std::size_t k = 0; k < s.size(); ++k)
      d.prob[k] += m.theta[j] * seg.prob[k];
    d.no_purchase += m.theta[j] * seg.no_purchase;
  }
  return d;
}

ChoiceDist dist(const AlphaMnl& m, std::span<const int> s,
                const std::vector<double>&) {
  ChoiceDist d = mnl_dist(m.base.v, s);
  double total = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    d.prob[k] *= m.alpha[s[k]];
    total += d.prob[k];
  }
  // Feasibility guarantees non-negativity; clamp rounding dust.
  d.no_purchase = std::max(0.0, 1.0 - total);
  return d;
}

ChoiceDist dist(const Gam& m, std::span<const int> s,
                const std::vector<double>&) {
  double V = 0.0;
  double W = std::accumulate(m.w.begin(), m.w.end(), 0.0);
  for (int p : s) {
    V += m.v[p];
    W -= m.w[p];  // offered products lose their shadow weight
  }
  const double denom = 1.0 + V + W;
  ChoiceDist d;
  d.prob.reserve(s.size());
  for (int p : s) d.prob.push_back(m.v[p] / denom);
  d.no_purchase = (1.0 + W) / denom;
  return d;
}

ChoiceDist dist(const NestedLogit& m, std::span<const int> s,
                const std::vector<double>&) {
  const int nests = m.nests();
  std::vector<int> offsets(nests + 1, 0);
  for (int i = 0; i < nests; ++i)
    offsets[i + 1] = offsets[i] + static_cast<int>(m.v[i].size());

  std::vector<double> nest_sum(nests, 0.0);
  for (int p : s) {
    const int nest =
        static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), p) -
                         offsets.begin()) -
        1;
    nest_sum[nest] += m.v[nest][p - offsets[nest]];
  }
  double denom = m.v0;
  std::vector<double> nest_weight(nests, 0.0);
  for (int i = 0; i < nests; ++i) {
    if (nest_sum[i] > 0.0) {
      nest_weight[i] = std::pow(nest_sum[i], m.gamma[i]);
      denom += nest_weight[i];
    }
  }
  ChoiceDist d;
  d.prob.reserve(s.size());
  for (int p : s) {
    const int nest =
        static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), p) -
                         offsets.begin()) -
        1;
    d.prob.push_back(nest_weight[nest] / denom * m.v[nest][p - offsets[nest]] /
                     nest_sum[nest]);
  }
  d.no_purchase = m.v0 / denom;
  return d;
}

// Absorption probabilities of the substitution walk: offered states and the
// no-purchase state absorb, the rest are eliminated by a dense Gaussian
// solve of (I - Q) X = R.
ChoiceDist dist(const MarkovChain& m, std::span<const int> s,
                const std::vector<double>& /*revenues*/) {
  const int n = static_cast<int>(m.arrival.size()) - 1;
  std::vector<char> offered(n + 1, 0);
  offered[0] = 1;
  for (int p : s) offered[p + 1] = 1;

  std::vector<int> transient;
  for (int st = 1; st <= n; ++st)
    if (!offered[st]) transient.push_back(st);
  std::vector<int> absorbing;
  absorbing.push_back(0);
  for (int p : s) absorbing.push_back(p + 1);

  const int t = static_cast<int>(transient.size());
  const int a = static_cast<int>(absorbing.size());

  // X[row][col]: probability of ending in absorbing[col] from transient[row].
  std::vector<std::vector<double>> A(t, std::vector<double>(t, 0.0));
  std::vector<std::vector<double>> X(t, std::vector<double>(a, 0.0));
  for (int r = 0; r < t; ++r) {
    for (int c = 0; c < t; ++c)
      A[r][c] = (r == c ? 1.0 : 0.0) - m.rho[transient[r]][transient[c]];
    for (int c = 0; c < a; ++c) X[r][c] = m.rho[transient[r]][absorbing[c]];
  }
  for (int col = 0; col < t; ++col) {
    int pivot = col;
    for (int r = col + 1; r < t; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    if (std::abs(A[pivot][col]) < 1e-14)
      throw std::runtime_error(
          "markov chain cannot reach the offered set from every state");
    std::swap(A[pivot], A[col]);
    std::swap(X[pivot], X[col]);
    for (int r = 0; r < t; ++r) {
      if (r == col) continue;
      const double f = A[r][col] / A[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < t; ++c) A[r][c] -= f * A[col][c];
      for (int c = 0; c < a; ++c) X[r][c] -= f * X[col][c];
    }
  }
  for (int r = 0; r < t; ++r) {
    const double d = A[r][r];
    for (int c = 0; c < a; ++c) X[r][c] /= d;
  }

  std::vector<double> landed(a, 0.0);
  for (int c = 0; c < a; ++c) landed[c] = m.arrival[absorbing[c]];
  for (int r = 0; r < t; ++r) {
    const double mass = m.arrival[transient[r]];
    if (mass == 0.0) continue;
    for (int c = 0; c < a; ++c) landed[c] += mass * X[r][c];
  }

  ChoiceDist d;
  d.no_purchase = landed[0];
  d.prob.assign(landed.begin() + 1, landed.end());
  return d;
}

ChoiceDist dist(const Rcs& m, std::span<const int> s,
                const std::vector<double>&) {
  const int n = static_cast<int>(m.attention.size());
  std::vector<int> rank(n, 0);
  for (int pos = 0; pos < n; ++pos) rank[m.preference[pos]] = pos;

  // Walk the offered set from most to least preferred; a product is chosen
  // when it is noticed and everything preferred to it was missed.
  std::vector<int> order(s.begin(), s.end());
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rank[x] < rank[y]; });
  std::vector<double> chosen(n, 0.0);
  double miss_all = 1.0;
  for (int p : order) {
    chosen[p] = m.attention[p] * miss_all;
    miss_all *= 1.0 - m.attention[p];
  }
  ChoiceDist d;
  d.prob.reserve(s.size());
  for (int p : s) d.prob.push_back(chosen[p]);
  d.no_purchase = miss_all;
  return d;
}

ChoiceDist dist(const SamplerRum&, std::span<const int>,
                const std::vector<double>&) {
  throw std::invalid_argument(
      "sampler_rum has no closed-form choice probabilities; use sampling");
}

}  // namespace

ChoiceDist choice_distribution(const Instance& inst,
                               std::span<const int> assortment) {
  check_assortment(assortment, inst.n());
  return std::visit(
      [&](const auto& m) { return dist(m, assortment, inst.revenues); },
      inst.model);
}

double choice_prob(const Instance& inst, int alt,
                   std::span<const int> assortment) {
  ChoiceDist d = choice_distribution(inst, assortment);
  if (alt == kNoPurchase) return d.no_purchase;
  auto it = std::lower_bound(assortment.begin(), assortment.end(), alt);
  if (it == assortment.end() || *it != alt)
    throw std::invalid_argument(
        "choice_prob: alternative is not in the offered assortment");
  return d.prob[it - assortment.begin()];
}

double expected_revenue(const Instance& inst,
                        std::span<const int> assortment) {
  if (assortment.empty()) return 0.0;
  ChoiceDist d = choice_distribution(inst, assortment);
  double rev = 0.0;
  for (std::size_t k = 0; k < assortment.size(); ++k)
    rev += inst.revenues[assortment[k]] * d.prob[k];
  return rev;
}

DerivedVectors derive_vectors(const Instance& inst) {
  const int n = inst.n();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  ChoiceDist full = choice_distribution(inst, all);

  DerivedVectors d;
  d.lambda = full.prob;
  d.lambda0 = full.no_purchase;
  if (!(d.lambda0 > 1e-15))
    throw std::invalid_argument(
        "model rejected: P(no purchase | full assortment) must exceed 1e-15");

  d.omega.resize(n);
  d.a.resize(n);
  d.b.resize(n);
  for (int p = 0; p < n; ++p) {
    const int single[1] = {p};
    d.omega[p] = choice_distribution(inst, single).prob[0];
    if (!(d.omega[p] > 0.0) || !(1.0 - d.omega[p] > 1e-15)) {
      std::ostringstream os;
      os << "model rejected: last-choice probability of product " << p + 1
         << " is " << d.omega[p] << ", outside (0, 1)";
      throw std::invalid_argument(os.str());
    }
    d.a[p] = d.lambda[p] / (1.0 - d.omega[p]);
    d.b[p] = d.omega[p] / d.lambda0;
  }
  return d;
}

AlphaMnl gam_to_alpha(const Gam& gam) {
  const int n = static_cast<int>(gam.v.size());
  // Fold the shadow weights into the no-purchase attraction, then
  // renormalize it to one; the per-product scale factors become alpha.
  double v0 = 1.0 + std::accumulate(gam.w.begin(), gam.w.end(), 0.0);
  AlphaMnl out;
  out.alpha.resize(n);
  out.base.v.resize(n);
  for (int i = 0; i < n; ++i) {
    const double residual = gam.v[i] - gam.w[i];
    out.alpha[i] = gam.v[i] / residual;
    out.base.v[i] = residual / v0;
  }
  return out;
}

}  // namespace assort
