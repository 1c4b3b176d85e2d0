#include "qrbf/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrbf/bases.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/series.hpp"

namespace qrbf {

namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive and finite");
}

template <class A, class B>
void check_same_dim(const A& a, const B& b) {
  if (a.size() != b.size() || a.empty()) {
    throw DimensionMismatch("kernel arguments must have the same positive dimension (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

KernelParams::KernelParams(double gamma, Normalization normalization) : gamma_(gamma), normalization_(normalization) {
  check_gamma(gamma);
}

Complex rbf_kernel_c(double gamma, const Complex& z, const Complex& w) {
  check_gamma(gamma);
  const Complex d = z - std::conj(w);
  return std::exp(-(d * d) / (gamma * gamma));
}

Complex rbf_kernel_d(double gamma, std::span<const Complex> z, std::span<const Complex> w) {
  check_gamma(gamma);
  check_same_dim(z, w);
  Complex exponent;
  for (std::size_t l = 0; l < z.size(); ++l) {
    const Complex d = z[l] - std::conj(w[l]);
    exponent += d * d;
  }
  return std::exp(-exponent / (gamma * gamma));
}

double gaussian_kernel(double gamma, std::span<const double> x, std::span<const double> y) {
  check_gamma(gamma);
  check_same_dim(x, y);
  double d2 = 0.0;
  for (std::size_t l = 0; l < x.size(); ++l) d2 += (x[l] - y[l]) * (x[l] - y[l]);
  return std::exp(-d2 / (gamma * gamma));
}

Complex fock_kernel_d(double alpha, std::span<const Complex> z, std::span<const Complex> w) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  check_same_dim(z, w);
  Complex pairing;
  for (std::size_t l = 0; l < z.size(); ++l) pairing += z[l] * std::conj(w[l]);
  return std::exp(alpha * pairing);
}

Quaternion rbf_kernel_qslice(double gamma, const Quaternion& q, const Quaternion& p) {
  check_gamma(gamma);
  const double nu = 2.0 / (gamma * gamma);
  return intrinsic_exp_sq(gamma, q, -1) * star_exp(nu, q, p) * intrinsic_exp_sq(gamma, conj(p), -1);
}

Quaternion kernel_sum_truncated(double gamma, const Quaternion& q, const Quaternion& p, int n_max) {
  if (n_max < 0 || n_max > kMaxBasisIndex) throw std::invalid_argument("truncation order must be in [0, 64]");
  const Quaternion pbar = conj(p);
  Quaternion sum;
  for (int n = 0; n <= n_max; ++n) sum += rbf_basis_q(gamma, n, q) * rbf_basis_q(gamma, n, pbar);
  return sum;
}

Complex kernel_sum_truncated_c(double gamma, const Complex& z, const Complex& w, int n_max) {
  if (n_max < 0 || n_max > kMaxBasisIndex) throw std::invalid_argument("truncation order must be in [0, 64]");
  Complex sum;
  for (int n = 0; n <= n_max; ++n) sum += rbf_basis_c(gamma, n, z) * std::conj(rbf_basis_c(gamma, n, w));
  return sum;
}

double kernel_sum_tail_bound(double gamma, const Quaternion& q, const Quaternion& p, int n_max) {
  check_gamma(gamma);
  const double nu = 2.0 / (gamma * gamma);
  const double t = nu * abs(q) * abs(p);
  const double outer = abs(intrinsic_exp_sq(gamma, q, -1)) * abs(intrinsic_exp_sq(gamma, conj(p), -1));
  if (t == 0.0) return 0.0;
  // Σ_{n>N} t^n/n!, starting from the first omitted term in log form.
  const int first = n_max + 1;
  double term = std::exp(first * std::log(t) - std::lgamma(first + 1.0));
  double tail = 0.0;
  for (int n = first; n < first + 2000; ++n) {
    tail += term;
    term *= t / (n + 1);
    if (n + 1 > 2.0 * t && term <= 1e-18 * tail) break;
  }
  return outer * tail;
}

double UtilityKernel::operator()(std::span<const double> x, std::span<const double> y) const {
  check_same_dim(x, y);
  double dot = 0.0;
  for (std::size_t l = 0; l < x.size(); ++l) dot += x[l] * y[l];
  switch (kind) {
    case Kind::polynomial:
      if (degree < 1) throw std::invalid_argument("polynomial kernel degree must be >= 1");
      return std::pow(1.0 + dot, degree);
    case Kind::exponential:
      return std::exp(dot);
  }
  throw std::logic_error("unknown utility kernel kind");
}

}  // namespace qrbf
