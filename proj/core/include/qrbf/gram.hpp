#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qrbf/quaternion.hpp"

namespace qrbf {

enum class KernelId {
  gaussian,     // exp(−‖x − y‖²/γ²) on R^d
  rbf,          // exp(−Σ(z_ℓ − w̄_ℓ)²/γ²) on C^d
  fock,         // exp(α Σ z_ℓ w̄_ℓ) on C^d
  qslice,       // K_{γ,S}(q, p) on H
  polynomial,   // (1 + ⟨x, y⟩)^m on R^d
  exponential,  // exp(⟨x, y⟩) on R^d
};

std::string_view to_string(KernelId id);
// Throws std::invalid_argument on unknown names.
KernelId parse_kernel_id(std::string_view name);

using RealPoints = std::vector<std::vector<double>>;
using ComplexPoints = std::vector<std::vector<Complex>>;
using QuaternionPoints = std::vector<Quaternion>;
using PointSet = std::variant<RealPoints, ComplexPoints, QuaternionPoints>;

struct GramParams {
  double gamma = 1.0;
  double alpha = 0.0;  // fock only; 0 selects 2/γ²
  int degree = 2;      // polynomial only
};

/// N×N kernel matrix, row-major: entry(a, b) = k(points[a], points[b]).
struct GramMatrix {
  KernelId kernel = KernelId::gaussian;
  GramParams params;
  std::size_t n = 0;
  std::variant<std::vector<Complex>, std::vector<Quaternion>> entries;
  std::uint64_t point_hash = 0;
  // max |G_ab − conj(G_ba)| / max(1, max |G|) before symmetrization.
  double asymmetry = 0.0;
  // Complex points with a nonzero imaginary part.
  bool nonreal_points = false;

  bool quaternionic() const { return std::holds_alternative<std::vector<Quaternion>>(entries); }
};

/// Evaluates the kernel on all pairs, then stores (G_ab + conj(G_ba))/2 so the result is exactly Hermitian.
/// Throws std::invalid_argument when the points do not match the kernel's domain.
GramMatrix build_gram(KernelId kernel, const GramParams& params, const PointSet& points);

/// FNV-1a over the point coordinates' bit patterns.
std::uint64_t hash_points(const PointSet& points);

/// Blockwise χ(a + b j) = [[a, b], [−conj(b), conj(a)]] with a, b ∈ C_i. Input is row-major n×n.
Eigen::MatrixXcd quat_matrix_to_complex(std::span<const Quaternion> q, std::size_t n);

struct PsdReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double tolerance = 0.0;  // max(tol, N·ε·‖G‖₂)
  bool psd = false;
  // False when positive semidefiniteness is reported but not claimed for this kernel and point type
  // (quaternionic kernels, complex-point RBF Grams).
  bool asserted = true;
};

/// Smallest eigenvalue test on a Hermitian matrix. Throws std::domain_error when the input is not Hermitian
/// within 1e−12 relative to its largest entry.
PsdReport psd_check(const Eigen::MatrixXcd& g, double tol);
PsdReport psd_check(const GramMatrix& g, double tol);

/// Entries as a dense complex matrix; quaternionic Grams go through quat_matrix_to_complex.
Eigen::MatrixXcd to_complex_matrix(const GramMatrix& g);

}  // namespace qrbf
