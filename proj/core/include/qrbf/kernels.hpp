#pragma once

#include <span>

#include "qrbf/quaternion.hpp"

namespace qrbf {

/// Prefactor convention for Segal–Bargmann kernels. `unitary` follows the Hermite generating series
/// and gives isometric transforms; `paper_literal` keeps the (ν/π)^{3/4} prefactor, which carries an
/// extra factor √(ν/π) on every image.
enum class Normalization { unitary, paper_literal };

/// γ > 0 with the Fock parameter ν = 2/γ² always derived from it.
class KernelParams {
 public:
  explicit KernelParams(double gamma, Normalization normalization = Normalization::unitary);

  double gamma() const { return gamma_; }
  double nu() const { return 2.0 / (gamma_ * gamma_); }
  Normalization normalization() const { return normalization_; }

 private:
  double gamma_;
  Normalization normalization_;
};

/// K_γ(z, w) = exp(−(z − w̄)²/γ²).
Complex rbf_kernel_c(double gamma, const Complex& z, const Complex& w);

/// K_{γ,d}(z, w) = exp(−Σ_ℓ (z_ℓ − w̄_ℓ)²/γ²), assembled as a single exponent.
Complex rbf_kernel_d(double gamma, std::span<const Complex> z, std::span<const Complex> w);

/// Real Gaussian kernel exp(−‖x − y‖²/γ²) on R^d.
double gaussian_kernel(double gamma, std::span<const double> x, std::span<const double> y);

/// Fock kernel F_α(z, w) = exp(α Σ_ℓ z_ℓ w̄_ℓ).
Complex fock_kernel_d(double alpha, std::span<const Complex> z, std::span<const Complex> w);

/// K_{γ,S}(q, p) = e^{−q²/γ²} · e_*^{2/γ²}(q p̄) · e^{−p̄²/γ²}, multiplied in that order.
Quaternion rbf_kernel_qslice(double gamma, const Quaternion& q, const Quaternion& p);

/// Σ_{n ≤ N} e_n^γ(q) e_n^γ(p̄). Requires 0 ≤ N ≤ 64.
Quaternion kernel_sum_truncated(double gamma, const Quaternion& q, const Quaternion& p, int n_max);

/// Σ_{n ≤ N} e_n^γ(z) conj(e_n^γ(w)) on C.
Complex kernel_sum_truncated_c(double gamma, const Complex& z, const Complex& w, int n_max);

/// Upper bound on |K_{γ,S}(q,p) − kernel_sum_truncated(γ,q,p,N)|:
/// |e^{−q²/γ²}| |e^{−p̄²/γ²}| Σ_{n>N} (ν|q||p|)^n / n!.
double kernel_sum_tail_bound(double gamma, const Quaternion& q, const Quaternion& p, int n_max);

/// Polynomial (1 + ⟨x,y⟩)^m and exponential exp(⟨x,y⟩) kernels on R^d.
struct UtilityKernel {
  enum class Kind { polynomial, exponential };
  Kind kind = Kind::polynomial;
  int degree = 1;

  double operator()(std::span<const double> x, std::span<const double> y) const;
};

}  // namespace qrbf
