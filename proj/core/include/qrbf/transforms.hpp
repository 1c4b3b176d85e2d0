#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qrbf/kernels.hpp"
#include "qrbf/quaternion.hpp"
#include "qrbf/series.hpp"
#include "qrbf/spaces.hpp"

namespace qrbf {

/// φ(x) = p(x)·e^{−rate·x²/2} with deg p ≤ poly_degree (per coordinate on R^d).
struct L2Certificate {
  double gaussian_rate = 1.0;
  int poly_degree = 0;
};

/// φ = Σ_n ψ_n^ν c_n, coefficients on the right. ‖φ‖² = Σ |c_n|².
struct HermiteExpansion {
  double nu = 1.0;
  std::vector<Quaternion> coeffs;

  Quaternion operator()(double x) const;
  double l2_norm() const;
};

struct L2Handle {
  std::function<Quaternion(double)> fn;
  std::optional<L2Certificate> certificate;
};

using L2Function = std::variant<HermiteExpansion, L2Handle>;

/// φ = Σ_n ψ_n^ν c_n on R^d with ψ_n = Π_ℓ ψ_{n_ℓ}.
struct HermiteExpansionD {
  double nu = 1.0;
  int dim = 1;
  std::map<MultiIndex, Complex> coeffs;

  Complex operator()(std::span<const double> x) const;
  double l2_norm() const;
};

struct L2HandleD {
  int dim = 1;
  std::function<Complex(std::span<const double>)> fn;
  std::optional<L2Certificate> certificate;
};

using L2FunctionD = std::variant<HermiteExpansionD, L2HandleD>;

/// order = 0 picks, per evaluation point, the smallest order the certificate makes exact.
struct TransformOptions {
  int order = 0;
};

/// A^ν(q, x) = c(ν)·e^{−(ν/2)(q² + x²) + ν√2 q x}; c = (ν/π)^{1/4} (unitary) or (ν/π)^{3/4}.
Quaternion sb_kernel(double nu, const Quaternion& q, double x, Normalization normalization = Normalization::unitary);

/// Σ_{n ≤ N} ν^{n/2} qⁿ ψ_n^ν(x) / √n!, the generating series of the unitary kernel.
Quaternion sb_kernel_series(double nu, const Quaternion& q, double x, int n_max);

/// c·e^{−(x − √2 q)²/γ²} with c = (2/(πγ²))^{1/4} or ^{3/4}; equals e^{−q²/γ²}·A^{2/γ²}(q, x).
Quaternion rbf_sb_kernel(double gamma, const Quaternion& q, double x,
                         Normalization normalization = Normalization::unitary);

/// Σ_{n ≤ N} e_n^γ(q) ψ_n^{2/γ²}(x).
Quaternion rbf_sb_kernel_series(double gamma, const Quaternion& q, double x, int n_max);

/// Exact image of a Hermite expansion with the transform's own ν: Σ qⁿ ν^{n/2} c_n / √n! (unitary).
/// Throws std::invalid_argument when phi.nu differs from nu.
QPowerSeries sb_image(double nu, const HermiteExpansion& phi);

/// Exact RBF image: RbfSeries with Fock side sb_image(2/γ², phi), so ψ_n ↦ e_n^γ (unitary).
RbfSeries rbf_sb_image(double gamma, const HermiteExpansion& phi);

/// B_ν[φ](q) = ∫ A^ν(q, x) φ(x) dx. Hermite expansions with matching ν use the exact image; everything else
/// goes through Gauss–Hermite quadrature with weight e^{−(ν + rate)x²/2}. Handles without a certificate throw
/// WeightIncompatibleError. paper_literal multiplies the result by √(ν/π).
Quaternion sb_transform(double nu, const L2Function& phi, const Quaternion& q,
                        Normalization normalization = Normalization::unitary, TransformOptions opts = {});

/// e^{−q²/γ²}·B_{2/γ²}[φ](q).
Quaternion rbf_sb_transform(double gamma, const L2Function& phi, const Quaternion& q,
                            Normalization normalization = Normalization::unitary, TransformOptions opts = {});

/// values[f][p] = B_ν[phis[f]](points[p]); kernel values are shared across functions at each point.
std::vector<std::vector<Quaternion>> sb_transform_batch(double nu, std::span<const L2Function> phis,
                                                        std::span<const Quaternion> points,
                                                        Normalization normalization = Normalization::unitary,
                                                        TransformOptions opts = {});

/// Growth certificate of B_ν[φ] on the Fock side when one is known (matching Gaussian rate), else nullopt.
std::optional<GrowthCertificate> sb_image_certificate(double nu, const L2Function& phi);

/// B_ν[φ] as a callable on H, carrying sb_image_certificate.
SliceHandle sb_transform_handle(double nu, L2Function phi, Normalization normalization = Normalization::unitary,
                                TransformOptions opts = {});

/// RBF image as a callable; its certificate describes the Fock side, as RbfSlice expects.
SliceHandle rbf_sb_transform_handle(double gamma, L2Function phi,
                                    Normalization normalization = Normalization::unitary, TransformOptions opts = {});

/// (ν/π)^{d/4} exp(−ν(z² + x²)/2 + ν√2 z·x) on C^d × R^d.
Complex sb_kernel_d(double nu, std::span<const Complex> z, std::span<const double> x);

/// (2/(πγ²))^{d/4} exp(−(√2 z − x)²/γ²) on C^d × R^d.
Complex rbf_sb_kernel_d(double gamma, std::span<const Complex> z, std::span<const double> x);

/// Exact image Σ z^n ν^{|n|/2} c_n / √n!; throws std::invalid_argument when phi.nu differs from nu.
CPowerSeries sb_image_d(double nu, const HermiteExpansionD& phi);
RbfCSeries rbf_sb_image_d(double gamma, const HermiteExpansionD& phi);

/// Fock-side and RBF transforms on C^d. The quadrature path is a tensor rule on R^d and is limited by the
/// node budget; Hermite expansions with matching ν are exact for any d.
Complex sb_transform_d(double nu, const L2FunctionD& phi, std::span<const Complex> z, TransformOptions opts = {});
Complex rbf_sb_transform_d(double gamma, const L2FunctionD& phi, std::span<const Complex> z,
                           TransformOptions opts = {});

/// values[f][p] = B_ν[phis[f]](z_p) for points stored flat with `dim` entries each.
std::vector<std::vector<Complex>> sb_transform_batch_d(double nu, int dim, std::span<const L2FunctionD> phis,
                                                       std::span<const Complex> points, TransformOptions opts = {});

}  // namespace qrbf
