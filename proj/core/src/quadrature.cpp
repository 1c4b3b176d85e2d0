#include "qrbf/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qrbf {

namespace {

struct RecurrenceValues {
  double ratio;       // p̃_M(x) / p̃_{M−1}(x)
  double log_weight;  // log of 1 / Σ_{k<M} p̃_k(x)²
};

// Orthonormal Hermite polynomials for e^{−x²} by the three-term recurrence, rescaled on the fly
// so that large |x| at high order cannot overflow.
RecurrenceValues hermite_recurrence(int order, double x) {
  constexpr double kRescaleAbove = 1e100;
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double sum_sq = 0.0;
  double log_scale = 0.0;
  for (int k = 0; k < order; ++k) {
    sum_sq += cur * cur;
    const double next = (std::numbers::sqrt2 * x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                        std::sqrt(static_cast<double>(k + 1));
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      prev /= kRescaleAbove;
      cur /= kRescaleAbove;
      sum_sq /= kRescaleAbove * kRescaleAbove;
      log_scale += std::log(kRescaleAbove);
    }
  }
  // cur = p̃_M, prev = p̃_{M−1}, both scaled by e^{−log_scale}.
  return {cur / prev, -2.0 * log_scale - std::log(sum_sq)};
}

QuadratureRule build_standard_rule(int order) {
  const Eigen::Index m = order;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index k = 1; k < m; ++k) sub(k - 1) = std::sqrt(static_cast<double>(k) / 2.0);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Gauss-Hermite eigenvalue solve did not converge");
  }

  QuadratureRule rule;
  rule.nu = 1.0;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const double deriv_scale = std::sqrt(2.0 * order);  // p̃_M' = √(2M) p̃_{M−1}
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const double step = hermite_recurrence(order, x).ratio / deriv_scale;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = std::exp(hermite_recurrence(order, x).log_weight);
  }

  std::vector<std::size_t> perm(rule.nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return rule.nodes[a] < rule.nodes[b]; });
  QuadratureRule sorted;
  sorted.nu = 1.0;
  for (std::size_t i : perm) {
    sorted.nodes.push_back(rule.nodes[i]);
    sorted.weights.push_back(rule.weights[i]);
  }

  // Exact mirror symmetry about 0.
  for (int i = 0; i < order / 2; ++i) {
    auto lo = static_cast<std::size_t>(i);
    auto hi = static_cast<std::size_t>(order - 1 - i);
    const double x = 0.5 * (sorted.nodes[hi] - sorted.nodes[lo]);
    const double w = 0.5 * (sorted.weights[hi] + sorted.weights[lo]);
    sorted.nodes[lo] = -x;
    sorted.nodes[hi] = x;
    sorted.weights[lo] = w;
    sorted.weights[hi] = w;
  }
  if (order % 2 == 1) sorted.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return sorted;
}

const QuadratureRule& standard_rule(int order) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_standard_rule(order)).first;
  return it->second;
}

}  // namespace

QuadratureRule gauss_hermite(int order, double nu) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw std::invalid_argument("quadrature order must be in [1, 512], got " + std::to_string(order));
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) throw std::invalid_argument("nu must be positive and finite");
  QuadratureRule rule = standard_rule(order);
  const double scale = 1.0 / std::sqrt(nu);
  for (auto& x : rule.nodes) x *= scale;
  for (auto& w : rule.weights) w *= scale;
  rule.nu = nu;
  return rule;
}

void check_tensor_budget(int order, int dim) {
  const double nodes = static_cast<double>(dim) * std::pow(static_cast<double>(order), dim);
  if (nodes > kMaxTensorNodes) {
    throw QuadratureBudgetError("tensor quadrature with order " + std::to_string(order) + " in dimension " +
                                std::to_string(dim) + " needs d*M^d = " + std::to_string(nodes) +
                                " nodes (cap 1e7); lower the quadrature order or the dimension");
  }
}

}  // namespace qrbf
