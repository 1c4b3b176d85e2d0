#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qrbf/errors.hpp"
#include "qrbf/quaternion.hpp"

namespace qrbf {

inline constexpr int kMaxQuadratureOrder = 512;
inline constexpr int kDefaultSliceOrder = 80;
inline constexpr double kMaxTensorNodes = 1e7;

/// Gauss–Hermite rule for the weight e^{−ν x²} on the real line. The weight lives in the
/// rule: integrands passed to the integrate_* helpers must not include it.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double nu = 1.0;

  int order() const { return static_cast<int>(nodes.size()); }
  // Highest polynomial degree integrated exactly.
  int exact_degree() const { return 2 * order() - 1; }
};

/// Builds the M-point rule (1 ≤ M ≤ 512) for e^{−ν x²}: Jacobi-matrix eigenvalues, Newton-polished
/// nodes, Christoffel weights, then scaled x → x/√ν. Rules for ν = 1 are cached per order.
QuadratureRule gauss_hermite(int order, double nu);

/// Compensated (Neumaier) accumulator; summation order is the caller's iteration order.
template <class T>
class CompensatedSum {
 public:
  void add(const T& v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <>
class CompensatedSum<Complex> {
 public:
  void add(const Complex& v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_, im_;
};

template <>
class CompensatedSum<Quaternion> {
 public:
  void add(const Quaternion& v) {
    r_.add(v.r);
    i_.add(v.i);
    j_.add(v.j);
    k_.add(v.k);
  }
  Quaternion value() const { return {r_.value(), i_.value(), j_.value(), k_.value()}; }

 private:
  CompensatedSum<double> r_, i_, j_, k_;
};

/// Σ_a Σ_b w_a w_b F(x_a + I y_b) ≈ ∫_{C_I} F(q) e^{−ν|q|²} dλ_I(q). F receives the quaternion x + I·y.
template <class F>
Quaternion integrate_slice(const QuadratureRule& rule, F&& f, const ImaginaryUnit& unit) {
  CompensatedSum<Quaternion> acc;
  const int m = rule.order();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Quaternion q = unit.embed({rule.nodes[static_cast<std::size_t>(a)], rule.nodes[static_cast<std::size_t>(b)]});
      const double w = rule.weights[static_cast<std::size_t>(a)] * rule.weights[static_cast<std::size_t>(b)];
      acc.add(f(q) * w);
    }
  }
  return acc.value();
}

/// Throws QuadratureBudgetError when d·M^d exceeds kMaxTensorNodes.
void check_tensor_budget(int order, int dim);

/// d-fold tensor Gauss–Hermite sum ≈ ∫_{R^d} F(x) e^{−ν|x|²} dx. F receives std::span<const double> of length d.
/// Nodes are visited in odometer order with the last coordinate fastest.
template <class F>
Complex integrate_rd(const QuadratureRule& rule, int dim, F&& f) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  check_tensor_budget(rule.order(), dim);
  const int m = rule.order();
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> x(static_cast<std::size_t>(dim), rule.nodes[0]);
  CompensatedSum<Complex> acc;
  while (true) {
    double w = 1.0;
    for (int l = 0; l < dim; ++l) w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
    acc.add(f(std::span<const double>(x)) * w);
    int l = dim - 1;
    while (l >= 0) {
      auto& i = idx[static_cast<std::size_t>(l)];
      if (++i < m) {
        x[static_cast<std::size_t>(l)] = rule.nodes[static_cast<std::size_t>(i)];
        break;
      }
      i = 0;
      x[static_cast<std::size_t>(l)] = rule.nodes[0];
      --l;
    }
    if (l < 0) break;
  }
  return acc.value();
}

}  // namespace qrbf
