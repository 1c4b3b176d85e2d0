#include "qrbf/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "qrbf/errors.hpp"

namespace qrbf {

namespace {

constexpr int kExactFactorialLimit = 20;

void require_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive and finite");
}

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

std::uint64_t exact_factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// 1 / (γ^{2j} j!) for j = 0..jmax.
std::vector<double> gaussian_factors(double gamma, int jmax) {
  std::vector<double> s(static_cast<std::size_t>(jmax) + 1);
  s[0] = 1.0;
  const double g2 = gamma * gamma;
  for (int j = 1; j <= jmax; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j) - 1] / (g2 * j);
  return s;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

int MultiIndex::total() const {
  int t = 0;
  for (int e : entries_) t += e;
  return t;
}

int MultiIndex::max_entry() const {
  int m = 0;
  for (int e : entries_) m = std::max(m, e);
  return m;
}

std::uint64_t MultiIndex::factorial_exact() const {
  if (total() > kExactFactorialLimit) {
    throw std::overflow_error("exact multi-index factorial requires |n| <= 20");
  }
  std::uint64_t f = 1;
  for (int e : entries_) f *= exact_factorial(e);
  return f;
}

double MultiIndex::factorial() const {
  if (total() <= kExactFactorialLimit) return static_cast<double>(factorial_exact());
  double f = 1.0;
  for (int e : entries_) f *= qrbf::factorial(e);
  return f;
}

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  if (n <= kExactFactorialLimit) return static_cast<double>(exact_factorial(n));
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

std::vector<MultiIndex> graded_indices(int dim, int max_total) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  // Fill coordinates left to right, largest first, so the result is lexicographically descending per degree.
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == dim - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, remaining - v);
    }
  };
  for (int t = 0; t <= max_total; ++t) fill(0, t);
  return out;
}

QPowerSeries::QPowerSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a power series needs at least one coefficient");
  if (degree() > kMaxSeriesDegree) {
    throw std::length_error("series degree " + std::to_string(degree()) + " exceeds cap " +
                            std::to_string(kMaxSeriesDegree));
  }
}

QPowerSeries QPowerSeries::monomial(int n, const Quaternion& a) {
  if (n < 0) throw std::invalid_argument("monomial degree must be non-negative");
  std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
  c.back() = a;
  return QPowerSeries(std::move(c));
}

Quaternion QPowerSeries::operator()(const Quaternion& q) const {
  Quaternion acc = coeffs_.back();
  for (int n = degree() - 1; n >= 0; --n) acc = coeffs_[static_cast<std::size_t>(n)] + q * acc;
  return acc;
}

bool QPowerSeries::is_intrinsic() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Quaternion& c) { return is_real(c); });
}

QPowerSeries gaussian_series(double gamma, int sign, int degree) {
  require_gamma(gamma);
  require_sign(sign);
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  const auto s = gaussian_factors(gamma, degree / 2);
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (int m = 0; 2 * m <= degree; ++m) {
    const double sgn = (sign < 0 && m % 2 == 1) ? -1.0 : 1.0;
    c[static_cast<std::size_t>(2 * m)] = sgn * s[static_cast<std::size_t>(m)];
  }
  return QPowerSeries(std::move(c));
}

QPowerSeries qseries_cauchy_mul(const QPowerSeries& intrinsic, const QPowerSeries& g, int max_degree) {
  if (!intrinsic.is_intrinsic()) {
    throw std::domain_error("left factor of the Cauchy product must have real coefficients");
  }
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  const int deg = std::min(intrinsic.degree() + g.degree(), max_degree);
  std::vector<Quaternion> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) {
    Quaternion acc;
    for (int j = 0; j <= k; ++j) acc += intrinsic.coeff(j).r * g.coeff(k - j);
    c[static_cast<std::size_t>(k)] = acc;
  }
  return QPowerSeries(std::move(c));
}

std::vector<Quaternion> gaussian_multiply_coeffs(double gamma, int sign, std::span<const Quaternion> a, int K) {
  require_gamma(gamma);
  require_sign(sign);
  if (K < 0) throw std::invalid_argument("K must be non-negative");
  const auto s = gaussian_factors(gamma, K / 2);
  auto at = [&](int n) { return n < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(n)] : Quaternion{}; };
  std::vector<Quaternion> out(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    Quaternion acc;
    for (int j = 0; 2 * j <= k; ++j) {
      const double sgn = (sign < 0 && j % 2 == 1) ? -1.0 : 1.0;
      acc += (sgn * s[static_cast<std::size_t>(j)]) * at(k - 2 * j);
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

std::vector<Quaternion> beta_coeffs(double gamma, std::span<const Quaternion> a, int K) {
  return gaussian_multiply_coeffs(gamma, 1, a, K);
}

double sequential_norm(double gamma, std::span<const Quaternion> a, int K) {
  const auto beta = beta_coeffs(gamma, a, K);
  const double log_half_g2 = std::log(gamma * gamma / 2.0);
  double weight = 1.0;  // k! γ^{2k} / 2^k, exact recursion while it stays small
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) weight *= k * gamma * gamma / 2.0;
    const double b2 = norm2(beta[static_cast<std::size_t>(k)]);
    if (b2 == 0.0) continue;
    if (k <= 30) {
      sum += weight * b2;
    } else {
      const double log_w = std::lgamma(k + 1.0) + k * log_half_g2;
      sum += std::exp(log_w + std::log(b2));
    }
  }
  return sum;
}

CPowerSeries::CPowerSeries(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

CPowerSeries::CPowerSeries(int dim, std::map<MultiIndex, Complex> coeffs) : CPowerSeries(dim) {
  for (auto& [n, c] : coeffs) set(n, c);
}

CPowerSeries CPowerSeries::monomial(const MultiIndex& n, Complex c) {
  CPowerSeries s(n.dim());
  s.set(n, c);
  return s;
}

Complex CPowerSeries::coeff(const MultiIndex& n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void CPowerSeries::set(const MultiIndex& n, Complex c) {
  if (n.dim() != dim_) throw DimensionMismatch("multi-index dimension does not match series dimension");
  if (n.total() > kMaxSeriesDegree) throw std::length_error("multi-index total degree exceeds series cap");
  coeffs_[n] = c;
}

int CPowerSeries::total_degree() const {
  int d = 0;
  for (const auto& [n, c] : coeffs_) d = std::max(d, n.total());
  return d;
}

int CPowerSeries::max_coordinate_degree() const {
  int d = 0;
  for (const auto& [n, c] : coeffs_) d = std::max(d, n.max_entry());
  return d;
}

Complex CPowerSeries::operator()(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim_) throw DimensionMismatch("point dimension does not match series dimension");
  const int deg = max_coordinate_degree();
  // powers[l][e] = z_l^e
  std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(dim_));
  for (int l = 0; l < dim_; ++l) {
    auto& p = powers[static_cast<std::size_t>(l)];
    p.resize(static_cast<std::size_t>(deg) + 1);
    p[0] = 1.0;
    for (int e = 1; e <= deg; ++e) p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e) - 1] * z[static_cast<std::size_t>(l)];
  }
  Complex sum;
  for (const auto& [n, c] : coeffs_) {
    Complex term = c;
    for (int l = 0; l < dim_; ++l) term *= powers[static_cast<std::size_t>(l)][static_cast<std::size_t>(n[static_cast<std::size_t>(l)])];
    sum += term;
  }
  return sum;
}

CPowerSeries gaussian_multiply(const CPowerSeries& f, double gamma, int sign, int max_total) {
  require_gamma(gamma);
  require_sign(sign);
  const int d = f.dim();
  const auto s = gaussian_factors(gamma, max_total / 2);
  // Shifts 2j with |j| ≤ max_total/2 carry the factor Π_ℓ sign^{j_ℓ} / (γ^{2 j_ℓ} j_ℓ!).
  const auto shifts = graded_indices(d, max_total / 2);
  CPowerSeries out(d);
  std::map<MultiIndex, Complex> acc;
  for (const auto& [n, c] : f.coeffs()) {
    for (const auto& j : shifts) {
      if (n.total() + 2 * j.total() > max_total) continue;
      double factor = 1.0;
      std::vector<int> target(static_cast<std::size_t>(d));
      for (int l = 0; l < d; ++l) {
        const int jl = j[static_cast<std::size_t>(l)];
        factor *= s[static_cast<std::size_t>(jl)];
        if (sign < 0 && jl % 2 == 1) factor = -factor;
        target[static_cast<std::size_t>(l)] = n[static_cast<std::size_t>(l)] + 2 * jl;
      }
      acc[MultiIndex(std::move(target))] += factor * c;
    }
  }
  for (auto& [n, c] : acc) out.set(n, c);
  return out;
}

}  // namespace qrbf
