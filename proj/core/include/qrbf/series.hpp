#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "qrbf/quaternion.hpp"

namespace qrbf {

/// Dense storage cap for truncated series: every object handled here is entire with
/// factorial coefficient decay, so degree 64 is far past double precision.
inline constexpr int kMaxSeriesDegree = 64;

/// n = (n_1, …, n_d) with z^n = Π z_ℓ^{n_ℓ}, n! = Π n_ℓ!, |n| = Σ n_ℓ.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  int dim() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t l) const { return entries_[l]; }
  std::span<const int> entries() const { return entries_; }

  int total() const;
  int max_entry() const;
  // Exact integer n!; throws std::overflow_error when |n| > 20.
  std::uint64_t factorial_exact() const;
  // n! as a double; exact up to |n| = 20, log-gamma beyond.
  double factorial() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// All multi-indices of dimension d with |n| ≤ max_total, ordered by |n| then lexicographically descending
/// (so (1,0) precedes (0,1)).
std::vector<MultiIndex> graded_indices(int dim, int max_total);

/// n! as a double; exact through 20!, log-gamma beyond.
double factorial(int n);

/// Truncated left slice-regular series f(q) = Σ q^n a_n, coefficients on the right.
class QPowerSeries {
 public:
  QPowerSeries() : coeffs_{Quaternion{}} {}
  // Throws std::length_error past kMaxSeriesDegree, std::invalid_argument if empty.
  explicit QPowerSeries(std::vector<Quaternion> coeffs);

  static QPowerSeries monomial(int n, const Quaternion& a = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  Quaternion coeff(int n) const {
    return n >= 0 && n <= degree() ? coeffs_[static_cast<std::size_t>(n)] : Quaternion{};
  }

  // Horner evaluation with powers kept on the left: a_0 + q(a_1 + q(a_2 + …)).
  Quaternion operator()(const Quaternion& q) const;

  // True when every coefficient is real (the series is intrinsic).
  bool is_intrinsic() const;

 private:
  std::vector<Quaternion> coeffs_;
};

/// Coefficients of e^{sign·q²/γ²} through the given degree: a_{2m} = sign^m / (γ^{2m} m!).
QPowerSeries gaussian_series(double gamma, int sign, int degree);

/// Cauchy product s·g where s has real coefficients, so they commute past the quaternionic g_n.
/// Throws std::domain_error when the left factor is not intrinsic. The result is truncated at max_degree.
QPowerSeries qseries_cauchy_mul(const QPowerSeries& intrinsic, const QPowerSeries& g,
                                int max_degree = kMaxSeriesDegree);

/// Coefficients 0..K of e^{sign·q²/γ²}·Σ q^n a_n. Missing a_n are zero.
std::vector<Quaternion> gaussian_multiply_coeffs(double gamma, int sign, std::span<const Quaternion> a, int K);

/// β_k = Σ_{j ≤ k/2} a_{k−2j} / (γ^{2j} j!), k = 0..K: the Fock-side coefficients of e^{q²/γ²} f.
std::vector<Quaternion> beta_coeffs(double gamma, std::span<const Quaternion> a, int K);

/// Partial sum Σ_{k ≤ K} (k! γ^{2k} / 2^k) |β_k|², the squared RBF-space norm of f = Σ q^n a_n in the limit.
double sequential_norm(double gamma, std::span<const Quaternion> a, int K);

/// Truncated power series on C^d with complex coefficients indexed by multi-indices.
class CPowerSeries {
 public:
  explicit CPowerSeries(int dim);
  CPowerSeries(int dim, std::map<MultiIndex, Complex> coeffs);

  static CPowerSeries monomial(const MultiIndex& n, Complex c = 1.0);

  int dim() const { return dim_; }
  const std::map<MultiIndex, Complex>& coeffs() const { return coeffs_; }
  Complex coeff(const MultiIndex& n) const;
  void set(const MultiIndex& n, Complex c);

  // Largest |n| and largest single exponent over stored terms.
  int total_degree() const;
  int max_coordinate_degree() const;

  Complex operator()(std::span<const Complex> z) const;

 private:
  int dim_;
  std::map<MultiIndex, Complex> coeffs_;
};

/// e^{sign·z²/γ²}·f with z² = Σ z_ℓ², truncated at total degree max_total.
CPowerSeries gaussian_multiply(const CPowerSeries& f, double gamma, int sign, int max_total);

}  // namespace qrbf
