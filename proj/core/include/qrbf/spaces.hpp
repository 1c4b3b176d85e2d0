#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qrbf/kernels.hpp"
#include "qrbf/quadrature.hpp"
#include "qrbf/quaternion.hpp"
#include "qrbf/series.hpp"

namespace qrbf {

/// Growth of a function on the Fock side, per real coordinate: |g| ≲ (1+|x|)^poly_degree · e^{exp_type·|x|}.
/// Needed before a callable can be integrated against a Gaussian weight with a known error.
struct GrowthCertificate {
  int poly_degree = 0;
  double exp_type = 0.0;
};

/// Polynomial degree a Gauss–Hermite rule with weight e^{−νx²} must integrate exactly so that
/// conj(g)·f is reproduced to double precision, given the growth of f and g.
int required_degree(const GrowthCertificate& f, const GrowthCertificate& g, double nu);

/// Quaternion-valued callable on H. For RBF spaces the certificate describes the Fock image e^{q²/γ²} f.
struct SliceHandle {
  std::function<Quaternion(const Quaternion&)> fn;
  std::optional<GrowthCertificate> certificate;
};

/// f(q) = e^{−q²/γ²} Σ qⁿ b_n, stored by its Fock-side coefficients b_n = (M^{γ²} f)_n.
struct RbfSeries {
  double gamma = 1.0;
  QPowerSeries fock;

  Quaternion operator()(const Quaternion& q) const;
};

/// e_n^γ as an RbfSeries: Fock side √(2^n/(γ^{2n} n!)) qⁿ.
RbfSeries rbf_basis_series(double gamma, int n);

/// Kernel section K^p(q) = K_{γ,S}(q, p), truncated on the Fock side at the given degree:
/// b_n = ν^n/n! · p̄ⁿ e^{−p̄²/γ²}.
RbfSeries kernel_section(double gamma, const Quaternion& p, int degree = kMaxSeriesDegree);

using FockSliceFunction = std::variant<QPowerSeries, SliceHandle>;
using RbfSliceFunction = std::variant<RbfSeries, SliceHandle>;

/// Complex callable on C^d; same certificate contract as SliceHandle.
struct CHandle {
  std::function<Complex(std::span<const Complex>)> fn;
  std::optional<GrowthCertificate> certificate;
};

/// f(z) = e^{−z²/γ²} Σ zⁿ b_n on C^d, z² = Σ z_ℓ².
struct RbfCSeries {
  double gamma = 1.0;
  CPowerSeries fock;

  Complex operator()(std::span<const Complex> z) const;
};

/// e_n^γ on C^d as an RbfCSeries.
RbfCSeries rbf_basis_series_d(double gamma, const MultiIndex& n);

using FockCFunction = std::variant<CPowerSeries, CHandle>;
using RbfCFunction = std::variant<RbfCSeries, CHandle>;

/// Slice Fock space F^ν_Slice(H), integrated on the slice C_I.
struct FockSlice {
  double nu;
  ImaginaryUnit slice;
};

/// Slice RBF space H_{γ,S}(H); its Fock partner has ν = 2/γ².
struct RbfSlice {
  KernelParams params;
  ImaginaryUnit slice;

  FockSlice fock() const { return {params.nu(), slice}; }
};

/// Fock space F_α(C^d).
struct FockC {
  double alpha;
  int dim;
};

/// RBF space H_{γ,d}; its Fock partner is F_{2/γ²}(C^d).
struct RbfC {
  KernelParams params;
  int dim;

  FockC fock() const { return {params.nu(), dim}; }
};

using SpaceTag = std::variant<FockSlice, RbfSlice, FockC, RbfC>;

/// order = 0 selects a default: kDefaultSliceOrder on slices, the smallest certified order within the
/// tensor node budget on C^d.
struct QuadOptions {
  int order = 0;
};

/// Tensor Gauss–Hermite nodes of a Fock space with their product weights, reusable across functions.
struct SliceGrid {
  std::vector<Quaternion> points;
  std::vector<double> weights;
};

/// Nodes of the 2d-dimensional real tensor grid read as z_ℓ = x_{2ℓ} + i x_{2ℓ+1}, stored flat (dim per point).
struct CGrid {
  int dim = 0;
  std::vector<Complex> points;
  std::vector<double> weights;

  std::span<const Complex> point(std::size_t n) const {
    return {points.data() + n * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  std::size_t size() const { return weights.size(); }
};

SliceGrid quadrature_grid(const FockSlice& space, int order);
CGrid quadrature_grid(const FockC& space, int order);

/// Rule order used for functions with these certificates: opts.order if set, else the automatic choice.
/// Throws WeightIncompatibleError when the order cannot integrate every pairing exactly.
int quadrature_order(const FockSlice& space, std::span<const GrowthCertificate> certs, QuadOptions opts = {});
int quadrature_order(const FockC& space, std::span<const GrowthCertificate> certs, QuadOptions opts = {});

/// Gram matrix from values sampled on a grid: values[a][n] = f_a(points[n]).
std::vector<Quaternion> gram_from_samples(const FockSlice& space, const SliceGrid& grid,
                                          const std::vector<std::vector<Quaternion>>& values);
std::vector<Complex> gram_from_samples(const FockC& space, const CGrid& grid,
                                       const std::vector<std::vector<Complex>>& values);

// Inner products ⟨f, g⟩ with conj(g) on the left of f. RBF inner products are evaluated as
// ⟨M^{γ²}f, M^{γ²}g⟩ on the Fock side, where the weight is exactly Gaussian.
// Throws WeightIncompatibleError for uncertified handles or when the rule is not exact enough.
Quaternion inner_product(const FockSlice& space, const FockSliceFunction& f, const FockSliceFunction& g,
                         QuadOptions opts = {});
Quaternion inner_product(const RbfSlice& space, const RbfSliceFunction& f, const RbfSliceFunction& g,
                         QuadOptions opts = {});
Complex inner_product(const FockC& space, const FockCFunction& f, const FockCFunction& g, QuadOptions opts = {});
Complex inner_product(const RbfC& space, const RbfCFunction& f, const RbfCFunction& g, QuadOptions opts = {});

double norm(const FockSlice& space, const FockSliceFunction& f, QuadOptions opts = {});
double norm(const RbfSlice& space, const RbfSliceFunction& f, QuadOptions opts = {});
double norm(const FockC& space, const FockCFunction& f, QuadOptions opts = {});
double norm(const RbfC& space, const RbfCFunction& f, QuadOptions opts = {});

/// Row-major N×N matrix G[a·N + b] = ⟨f_a, f_b⟩, each function sampled once.
std::vector<Quaternion> gram_matrix(const FockSlice& space, std::span<const FockSliceFunction> fs, QuadOptions opts = {});
std::vector<Quaternion> gram_matrix(const RbfSlice& space, std::span<const RbfSliceFunction> fs, QuadOptions opts = {});
std::vector<Complex> gram_matrix(const FockC& space, std::span<const FockCFunction> fs, QuadOptions opts = {});
std::vector<Complex> gram_matrix(const RbfC& space, std::span<const RbfCFunction> fs, QuadOptions opts = {});

/// M^{±γ²}: multiplication by e^{±q²/γ²}. On series the result is truncated at `degree`; the maps are
/// lower triangular, so coefficients 0..degree are exact and M^{−γ²}∘M^{γ²} is the identity on them.
QPowerSeries m_operator(double gamma, int direction, const QPowerSeries& f, int degree = kMaxSeriesDegree);
SliceHandle m_operator(double gamma, int direction, SliceHandle f);
CPowerSeries m_operator(double gamma, int direction, const CPowerSeries& f, int max_total = kMaxSeriesDegree);
CHandle m_operator(double gamma, int direction, CHandle f);

/// Fock-side image M^{γ²} f of an RBF-space function.
FockSliceFunction fock_image(double gamma, const RbfSliceFunction& f);
FockCFunction fock_image(double gamma, const RbfCFunction& f);

// ⟨f, K_w⟩ evaluated by quadrature with the closed-form kernel; the contract is that the result is f(w).
Quaternion reproduce(const FockSlice& space, const FockSliceFunction& f, const Quaternion& w, QuadOptions opts = {});
Quaternion reproduce(const RbfSlice& space, const RbfSliceFunction& f, const Quaternion& w, QuadOptions opts = {});
Complex reproduce(const FockC& space, const FockCFunction& f, std::span<const Complex> w, QuadOptions opts = {});
Complex reproduce(const RbfC& space, const RbfCFunction& f, std::span<const Complex> w, QuadOptions opts = {});

struct BoundReport {
  double norm = 0.0;
  double max_ratio = 0.0;  // max |f(q)| / (e^{2y²/γ²} ‖f‖)
  Quaternion worst_point;
};

/// Evaluates |f(q)| ≤ e^{2y²/γ²} ‖f‖ over the grid (y = |Im q|) and reports the largest ratio.
BoundReport pointwise_bound_check(double gamma, const RbfSeries& f, std::span<const Quaternion> grid,
                                  QuadOptions opts = {});

struct SliceIndependenceReport {
  double norm_i = 0.0;
  double norm_j = 0.0;
  double relative_difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Computes ‖f‖_{H_{γ,S}} on C_I and on C_J and compares them.
SliceIndependenceReport slice_independence_check(double gamma, const RbfSliceFunction& f, const ImaginaryUnit& unit_i,
                                                 const ImaginaryUnit& unit_j, double tol = 1e-10,
                                                 QuadOptions opts = {});

}  // namespace qrbf
