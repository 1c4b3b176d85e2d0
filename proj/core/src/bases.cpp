#include "qrbf/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrbf/errors.hpp"

namespace qrbf {

namespace {

void check_index(int n) {
  if (n < 0 || n > kMaxBasisIndex) throw std::invalid_argument("basis index must be in [0, 64]");
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

}  // namespace

double hermite_h(double nu, int n, double x) {
  check_positive(nu, "nu");
  check_index(n);
  const double t = std::sqrt(nu) * x;
  double prev = 0.0;
  double cur = 1.0;  // H_0
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return std::pow(nu, 0.5 * n) * cur;
}

std::vector<double> hermite_psi_all(double nu, int nmax, double x) {
  check_positive(nu, "nu");
  check_index(nmax);
  const double t = std::sqrt(nu) * x;
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  const double scale = std::pow(nu, 0.25);
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * t * t);
  for (int k = 0; k <= nmax; ++k) {
    out[static_cast<std::size_t>(k)] = scale * cur;
    const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return out;
}

double hermite_psi(double nu, int n, double x) { return hermite_psi_all(nu, n, x).back(); }

double hermite_psi_d(double nu, const MultiIndex& n, std::span<const double> x) {
  if (static_cast<int>(x.size()) != n.dim()) throw DimensionMismatch("hermite_psi_d: index and point dimensions differ");
  double v = 1.0;
  for (int l = 0; l < n.dim(); ++l) v *= hermite_psi(nu, n[static_cast<std::size_t>(l)], x[static_cast<std::size_t>(l)]);
  return v;
}

Complex rbf_basis_c(double gamma, int n, const Complex& z) {
  check_positive(gamma, "gamma");
  check_index(n);
  const double nu = 2.0 / (gamma * gamma);
  // √(2^n/(γ^{2n} n!)) zⁿ = Π_{k≤n} √(ν/k) z keeps every partial product O(|z|√ν)-sized.
  Complex poly = 1.0;
  for (int k = 1; k <= n; ++k) poly *= std::sqrt(nu / k) * z;
  return poly * std::exp(-(z * z) / (gamma * gamma));
}

Quaternion rbf_basis_q(double gamma, int n, const Quaternion& q) {
  return apply_on_slice(q, [&](const Complex& z) { return rbf_basis_c(gamma, n, z); });
}

Complex rbf_basis_d(double gamma, const MultiIndex& n, std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != n.dim()) throw DimensionMismatch("rbf_basis_d: index and point dimensions differ");
  Complex v = 1.0;
  for (int l = 0; l < n.dim(); ++l) v *= rbf_basis_c(gamma, n[static_cast<std::size_t>(l)], z[static_cast<std::size_t>(l)]);
  return v;
}

}  // namespace qrbf
