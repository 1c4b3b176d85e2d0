#pragma once

#include <span>
#include <vector>

#include "qrbf/quaternion.hpp"
#include "qrbf/series.hpp"

namespace qrbf {

inline constexpr int kMaxBasisIndex = 64;

/// Weighted Hermite polynomial h_n^ν(x) = (−1)^n e^{νx²} dⁿ/dxⁿ e^{−νx²} = ν^{n/2} H_n(√ν x),
/// with ‖h_n^ν‖² in L²(e^{−νx²}dx) equal to 2^n ν^n n! (π/ν)^{1/2}. Requires 0 ≤ n ≤ 64.
double hermite_h(double nu, int n, double x);

/// Normalized Hermite function ψ_n^ν(x) = h_n^ν(x) e^{−νx²/2} / ‖h_n^ν‖, orthonormal in L²(R, dx).
/// Evaluated by the normalized recurrence so magnitudes stay O(1) up to n = 64.
double hermite_psi(double nu, int n, double x);

/// ψ_0^ν(x), …, ψ_nmax^ν(x) in one recurrence pass.
std::vector<double> hermite_psi_all(double nu, int nmax, double x);

/// Tensor Hermite function ψ_n(x) = Π_ℓ ψ_{n_ℓ}^ν(x_ℓ).
double hermite_psi_d(double nu, const MultiIndex& n, std::span<const double> x);

/// e_n^γ(z) = √(2^n / (γ^{2n} n!)) zⁿ e^{−z²/γ²} on C.
Complex rbf_basis_c(double gamma, int n, const Complex& z);

/// e_n^γ(q) on H, evaluated on the slice of q. Intrinsic, so qⁿ and the Gaussian commute.
Quaternion rbf_basis_q(double gamma, int n, const Quaternion& q);

/// e_n^γ(z) on C^d, computed as Π_ℓ e_{n_ℓ}^γ(z_ℓ). Throws DimensionMismatch when dim(n) ≠ dim(z).
Complex rbf_basis_d(double gamma, const MultiIndex& n, std::span<const Complex> z);

}  // namespace qrbf
