#include "qrbf/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "qrbf/bases.hpp"
#include "qrbf/errors.hpp"

namespace qrbf {

namespace {

constexpr int kOrderMargin = 4;
constexpr int kMinAutoOrder = 8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Smallest k with x^k/k! ≤ 1e−17 · Σ_{j≤k} x^j/j! and k > x, where x = τ²/(4ν): the Taylor order of
// e^{τ|t|} beyond which its weighted moments are negligible.
int exponential_degree_half(double exp_type, double nu) {
  if (exp_type <= 0.0) return 0;
  const double x = exp_type * exp_type / (4.0 * nu);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= x / k;
    sum += term;
    if (k > x && term <= 1e-17 * sum) return k;
  }
  throw WeightIncompatibleError("exponential type too large for Gaussian quadrature");
}

GrowthCertificate require_certificate(const std::optional<GrowthCertificate>& c) {
  if (!c) {
    throw WeightIncompatibleError(
        "callable integrand has no growth certificate; cannot certify Gaussian quadrature accuracy");
  }
  if (c->poly_degree < 0 || c->exp_type < 0.0) throw std::invalid_argument("growth certificate must be non-negative");
  return *c;
}

GrowthCertificate certificate_of(const FockSliceFunction& f) {
  return std::visit(Overloaded{[](const QPowerSeries& s) { return GrowthCertificate{s.degree(), 0.0}; },
                               [](const SliceHandle& h) { return require_certificate(h.certificate); }},
                    f);
}

GrowthCertificate certificate_of(const FockCFunction& f) {
  return std::visit(Overloaded{[](const CPowerSeries& s) { return GrowthCertificate{s.max_coordinate_degree(), 0.0}; },
                               [](const CHandle& h) { return require_certificate(h.certificate); }},
                    f);
}

Quaternion evaluate(const FockSliceFunction& f, const Quaternion& q) {
  return std::visit(Overloaded{[&](const QPowerSeries& s) { return s(q); }, [&](const SliceHandle& h) { return h.fn(q); }},
                    f);
}

Complex evaluate(const FockCFunction& f, std::span<const Complex> z) {
  return std::visit(Overloaded{[&](const CPowerSeries& s) { return s(z); }, [&](const CHandle& h) { return h.fn(z); }}, f);
}

template <class Fn>
std::vector<GrowthCertificate> certificates(std::span<const Fn> fs) {
  std::vector<GrowthCertificate> certs;
  certs.reserve(fs.size());
  for (const auto& f : fs) certs.push_back(certificate_of(f));
  return certs;
}

int max_required(std::span<const GrowthCertificate> certs, double nu) {
  int req = 0;
  for (const auto& a : certs) {
    for (const auto& b : certs) req = std::max(req, required_degree(a, b, nu));
  }
  return req;
}

void require_exact(int required, int order) {
  if (required > 2 * order - 1) {
    throw WeightIncompatibleError("integrand needs exact degree " + std::to_string(required) +
                                  " but a rule of order " + std::to_string(order) + " is exact only to degree " +
                                  std::to_string(2 * order - 1) + "; raise the quadrature order");
  }
}

int slice_order(const QuadOptions& opts, int required) {
  int order = opts.order;
  if (order <= 0) order = std::max(kDefaultSliceOrder, (required + 2) / 2);
  if (order > kMaxQuadratureOrder) order = kMaxQuadratureOrder;
  require_exact(required, order);
  return order;
}

// Largest order M with (2d)·M^{2d} within the node budget.
int max_budget_order(int real_dim) {
  int m = 1;
  while (static_cast<double>(real_dim) * std::pow(m + 1.0, real_dim) <= kMaxTensorNodes) ++m;
  return m;
}

int tensor_order(const QuadOptions& opts, int required, int real_dim) {
  int order = opts.order;
  if (order <= 0) {
    order = std::max(kMinAutoOrder, (required + 2) / 2 + kOrderMargin);
    order = std::min(order, std::min(max_budget_order(real_dim), kDefaultSliceOrder));
  }
  require_exact(required, order);
  check_tensor_budget(order, real_dim);
  return order;
}

template <class T>
T weighted_pairing(std::span<const double> w, const std::vector<T>& f, const std::vector<T>& g, double scale) {
  CompensatedSum<T> acc;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if constexpr (std::is_same_v<T, Quaternion>) {
      acc.add(conj(g[n]) * f[n] * w[n]);
    } else {
      acc.add(std::conj(g[n]) * f[n] * w[n]);
    }
  }
  return acc.value() * scale;
}

std::vector<Quaternion> sample(const FockSliceFunction& f, const SliceGrid& grid) {
  std::vector<Quaternion> v;
  v.reserve(grid.points.size());
  for (const auto& q : grid.points) v.push_back(evaluate(f, q));
  return v;
}

std::vector<Complex> sample(const FockCFunction& f, const CGrid& grid) {
  std::vector<Complex> v;
  v.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) v.push_back(evaluate(f, grid.point(n)));
  return v;
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

}  // namespace

int required_degree(const GrowthCertificate& f, const GrowthCertificate& g, double nu) {
  return f.poly_degree + g.poly_degree + 2 * exponential_degree_half(f.exp_type + g.exp_type, nu);
}

Quaternion RbfSeries::operator()(const Quaternion& q) const { return intrinsic_exp_sq(gamma, q, -1) * fock(q); }

Complex RbfCSeries::operator()(std::span<const Complex> z) const {
  Complex z2;
  for (const auto& c : z) z2 += c * c;
  return std::exp(-z2 / (gamma * gamma)) * fock(z);
}

RbfSeries rbf_basis_series(double gamma, int n) {
  check_positive(gamma, "gamma");
  const double nu = 2.0 / (gamma * gamma);
  double c = 1.0;
  for (int k = 1; k <= n; ++k) c *= std::sqrt(nu / k);
  return {gamma, QPowerSeries::monomial(n, c)};
}

RbfSeries kernel_section(double gamma, const Quaternion& p, int degree) {
  check_positive(gamma, "gamma");
  const double nu = 2.0 / (gamma * gamma);
  const Quaternion pbar = conj(p);
  const Quaternion tail = intrinsic_exp_sq(gamma, pbar, -1);
  std::vector<Quaternion> b(static_cast<std::size_t>(degree) + 1);
  Quaternion power = 1.0;
  double c = 1.0;
  for (int n = 0; n <= degree; ++n) {
    if (n > 0) {
      power = power * pbar;
      c *= nu / n;
    }
    b[static_cast<std::size_t>(n)] = c * (power * tail);
  }
  return {gamma, QPowerSeries(std::move(b))};
}

RbfCSeries rbf_basis_series_d(double gamma, const MultiIndex& n) {
  check_positive(gamma, "gamma");
  const double nu = 2.0 / (gamma * gamma);
  double c = 1.0;
  for (int l = 0; l < n.dim(); ++l) {
    for (int k = 1; k <= n[static_cast<std::size_t>(l)]; ++k) c *= std::sqrt(nu / k);
  }
  return {gamma, CPowerSeries::monomial(n, c)};
}

// ---- grids -----------------------------------------------------------------------------------------

SliceGrid quadrature_grid(const FockSlice& space, int order) {
  check_positive(space.nu, "nu");
  const auto rule = gauss_hermite(order, space.nu);
  SliceGrid g;
  const auto m = static_cast<std::size_t>(rule.order());
  g.points.reserve(m * m);
  g.weights.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      g.points.push_back(space.slice.embed({rule.nodes[a], rule.nodes[b]}));
      g.weights.push_back(rule.weights[a] * rule.weights[b]);
    }
  }
  return g;
}

CGrid quadrature_grid(const FockC& space, int order) {
  check_positive(space.alpha, "alpha");
  check_dim(space.dim);
  const auto real_dim = static_cast<std::size_t>(2 * space.dim);
  check_tensor_budget(order, static_cast<int>(real_dim));
  const auto rule = gauss_hermite(order, space.alpha);
  const auto m = static_cast<std::size_t>(rule.order());
  CGrid g;
  g.dim = space.dim;
  std::vector<std::size_t> idx(real_dim, 0);
  while (true) {
    double w = 1.0;
    for (std::size_t l = 0; l < real_dim; ++l) w *= rule.weights[idx[l]];
    g.weights.push_back(w);
    for (std::size_t l = 0; l < real_dim; l += 2) g.points.emplace_back(rule.nodes[idx[l]], rule.nodes[idx[l + 1]]);
    std::size_t l = real_dim;
    while (l > 0) {
      if (++idx[l - 1] < m) break;
      idx[l - 1] = 0;
      --l;
    }
    if (l == 0) break;
  }
  return g;
}

int quadrature_order(const FockSlice& space, std::span<const GrowthCertificate> certs, QuadOptions opts) {
  check_positive(space.nu, "nu");
  return slice_order(opts, max_required(certs, space.nu));
}

int quadrature_order(const FockC& space, std::span<const GrowthCertificate> certs, QuadOptions opts) {
  check_positive(space.alpha, "alpha");
  check_dim(space.dim);
  return tensor_order(opts, max_required(certs, space.alpha), 2 * space.dim);
}

std::vector<Quaternion> gram_from_samples(const FockSlice& space, const SliceGrid& grid,
                                          const std::vector<std::vector<Quaternion>>& values) {
  const double scale = space.nu / std::numbers::pi;
  const std::size_t n = values.size();
  std::vector<Quaternion> g(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a * n + b] = weighted_pairing<Quaternion>(grid.weights, values[a], values[b], scale);
  }
  return g;
}

std::vector<Complex> gram_from_samples(const FockC& space, const CGrid& grid,
                                       const std::vector<std::vector<Complex>>& values) {
  const double scale = std::pow(space.alpha / std::numbers::pi, space.dim);
  const std::size_t n = values.size();
  std::vector<Complex> g(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a * n + b] = weighted_pairing<Complex>(grid.weights, values[a], values[b], scale);
  }
  return g;
}

// ---- slice spaces --------------------------------------------------------------------------------

std::vector<Quaternion> gram_matrix(const FockSlice& space, std::span<const FockSliceFunction> fs, QuadOptions opts) {
  const auto certs = certificates(fs);
  const auto grid = quadrature_grid(space, quadrature_order(space, certs, opts));
  std::vector<std::vector<Quaternion>> values;
  values.reserve(fs.size());
  for (const auto& f : fs) values.push_back(sample(f, grid));
  return gram_from_samples(space, grid, values);
}

Quaternion inner_product(const FockSlice& space, const FockSliceFunction& f, const FockSliceFunction& g,
                         QuadOptions opts) {
  const GrowthCertificate certs[] = {certificate_of(f), certificate_of(g)};
  const auto grid = quadrature_grid(space, quadrature_order(space, certs, opts));
  return weighted_pairing<Quaternion>(grid.weights, sample(f, grid), sample(g, grid), space.nu / std::numbers::pi);
}

FockSliceFunction fock_image(double gamma, const RbfSliceFunction& f) {
  return std::visit(Overloaded{[](const RbfSeries& s) -> FockSliceFunction { return s.fock; },
                               [&](const SliceHandle& h) -> FockSliceFunction { return m_operator(gamma, 1, h); }},
                    f);
}

Quaternion inner_product(const RbfSlice& space, const RbfSliceFunction& f, const RbfSliceFunction& g,
                         QuadOptions opts) {
  const double gamma = space.params.gamma();
  return inner_product(space.fock(), fock_image(gamma, f), fock_image(gamma, g), opts);
}

std::vector<Quaternion> gram_matrix(const RbfSlice& space, std::span<const RbfSliceFunction> fs, QuadOptions opts) {
  std::vector<FockSliceFunction> images;
  images.reserve(fs.size());
  for (const auto& f : fs) images.push_back(fock_image(space.params.gamma(), f));
  return gram_matrix(space.fock(), std::span<const FockSliceFunction>(images), opts);
}

double norm(const FockSlice& space, const FockSliceFunction& f, QuadOptions opts) {
  return std::sqrt(std::max(0.0, inner_product(space, f, f, opts).r));
}

double norm(const RbfSlice& space, const RbfSliceFunction& f, QuadOptions opts) {
  return std::sqrt(std::max(0.0, inner_product(space, f, f, opts).r));
}

// ---- C^d spaces ------------------------------------------------------------------------------------

std::vector<Complex> gram_matrix(const FockC& space, std::span<const FockCFunction> fs, QuadOptions opts) {
  const auto certs = certificates(fs);
  const auto grid = quadrature_grid(space, quadrature_order(space, certs, opts));
  std::vector<std::vector<Complex>> values;
  values.reserve(fs.size());
  for (const auto& f : fs) values.push_back(sample(f, grid));
  return gram_from_samples(space, grid, values);
}

Complex inner_product(const FockC& space, const FockCFunction& f, const FockCFunction& g, QuadOptions opts) {
  const GrowthCertificate certs[] = {certificate_of(f), certificate_of(g)};
  const auto grid = quadrature_grid(space, quadrature_order(space, certs, opts));
  return weighted_pairing<Complex>(grid.weights, sample(f, grid), sample(g, grid),
                                   std::pow(space.alpha / std::numbers::pi, space.dim));
}

FockCFunction fock_image(double gamma, const RbfCFunction& f) {
  return std::visit(Overloaded{[](const RbfCSeries& s) -> FockCFunction { return s.fock; },
                               [&](const CHandle& h) -> FockCFunction { return m_operator(gamma, 1, h); }},
                    f);
}

Complex inner_product(const RbfC& space, const RbfCFunction& f, const RbfCFunction& g, QuadOptions opts) {
  const double gamma = space.params.gamma();
  return inner_product(space.fock(), fock_image(gamma, f), fock_image(gamma, g), opts);
}

std::vector<Complex> gram_matrix(const RbfC& space, std::span<const RbfCFunction> fs, QuadOptions opts) {
  std::vector<FockCFunction> images;
  images.reserve(fs.size());
  for (const auto& f : fs) images.push_back(fock_image(space.params.gamma(), f));
  return gram_matrix(space.fock(), std::span<const FockCFunction>(images), opts);
}

double norm(const FockC& space, const FockCFunction& f, QuadOptions opts) {
  return std::sqrt(std::max(0.0, inner_product(space, f, f, opts).real()));
}

double norm(const RbfC& space, const RbfCFunction& f, QuadOptions opts) {
  return std::sqrt(std::max(0.0, inner_product(space, f, f, opts).real()));
}

// ---- multiplication operators -------------------------------------------------------------------

QPowerSeries m_operator(double gamma, int direction, const QPowerSeries& f, int degree) {
  if (degree < 0 || degree > kMaxSeriesDegree) throw std::invalid_argument("degree must be in [0, 64]");
  return QPowerSeries(gaussian_multiply_coeffs(gamma, direction, f.coeffs(), degree));
}

SliceHandle m_operator(double gamma, int direction, SliceHandle f) {
  check_positive(gamma, "gamma");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  auto inner = std::move(f.fn);
  SliceHandle out;
  out.certificate = f.certificate;
  out.fn = [gamma, direction, inner = std::move(inner)](const Quaternion& q) {
    return intrinsic_exp_sq(gamma, q, direction) * inner(q);
  };
  return out;
}

CPowerSeries m_operator(double gamma, int direction, const CPowerSeries& f, int max_total) {
  return gaussian_multiply(f, gamma, direction, max_total);
}

CHandle m_operator(double gamma, int direction, CHandle f) {
  check_positive(gamma, "gamma");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  auto inner = std::move(f.fn);
  CHandle out;
  out.certificate = f.certificate;
  const double scale = direction / (gamma * gamma);
  out.fn = [scale, inner = std::move(inner)](std::span<const Complex> z) {
    Complex z2;
    for (const auto& c : z) z2 += c * c;
    return std::exp(scale * z2) * inner(z);
  };
  return out;
}

// ---- reproducing property ------------------------------------------------------------------------

Quaternion reproduce(const FockSlice& space, const FockSliceFunction& f, const Quaternion& w, QuadOptions opts) {
  const double nu = space.nu;
  SliceHandle section{[nu, w](const Quaternion& q) { return star_exp(nu, q, w); }, GrowthCertificate{0, nu * abs(w)}};
  return inner_product(space, f, section, opts);
}

Quaternion reproduce(const RbfSlice& space, const RbfSliceFunction& f, const Quaternion& w, QuadOptions opts) {
  const double gamma = space.params.gamma();
  // Fock image of K^w is e_*^ν(q w̄) e^{−w̄²/γ²}: exponential type ν|w|.
  SliceHandle section{[gamma, w](const Quaternion& q) { return rbf_kernel_qslice(gamma, q, w); },
                      GrowthCertificate{0, space.params.nu() * abs(w)}};
  return inner_product(space, f, section, opts);
}

namespace {

double max_modulus(std::span<const Complex> w) {
  double m = 0.0;
  for (const auto& c : w) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

Complex reproduce(const FockC& space, const FockCFunction& f, std::span<const Complex> w, QuadOptions opts) {
  if (static_cast<int>(w.size()) != space.dim) throw DimensionMismatch("evaluation point has the wrong dimension");
  std::vector<Complex> wv(w.begin(), w.end());
  const double alpha = space.alpha;
  CHandle section{[alpha, wv](std::span<const Complex> z) { return fock_kernel_d(alpha, z, wv); },
                  GrowthCertificate{0, alpha * max_modulus(w)}};
  return inner_product(space, f, section, opts);
}

Complex reproduce(const RbfC& space, const RbfCFunction& f, std::span<const Complex> w, QuadOptions opts) {
  if (static_cast<int>(w.size()) != space.dim) throw DimensionMismatch("evaluation point has the wrong dimension");
  std::vector<Complex> wv(w.begin(), w.end());
  const double gamma = space.params.gamma();
  CHandle section{[gamma, wv](std::span<const Complex> z) { return rbf_kernel_d(gamma, z, wv); },
                  GrowthCertificate{0, space.params.nu() * max_modulus(w)}};
  return inner_product(space, f, section, opts);
}

// ---- checks ----------------------------------------------------------------------------------------

BoundReport pointwise_bound_check(double gamma, const RbfSeries& f, std::span<const Quaternion> grid,
                                  QuadOptions opts) {
  BoundReport report;
  report.norm = norm(RbfSlice{KernelParams(gamma), ImaginaryUnit::i()}, f, opts);
  for (const auto& q : grid) {
    const double y = abs(vector_part(q));
    const double bound = std::exp(2.0 * y * y / (gamma * gamma)) * report.norm;
    const double value = abs(f(q));
    const double ratio = bound > 0.0 ? value / bound : (value == 0.0 ? 0.0 : INFINITY);
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_point = q;
    }
  }
  return report;
}

SliceIndependenceReport slice_independence_check(double gamma, const RbfSliceFunction& f, const ImaginaryUnit& unit_i,
                                                 const ImaginaryUnit& unit_j, double tol, QuadOptions opts) {
  SliceIndependenceReport r;
  r.norm_i = norm(RbfSlice{KernelParams(gamma), unit_i}, f, opts);
  r.norm_j = norm(RbfSlice{KernelParams(gamma), unit_j}, f, opts);
  const double scale = std::max(r.norm_i, r.norm_j);
  r.relative_difference = scale > 0.0 ? std::abs(r.norm_i - r.norm_j) / scale : 0.0;
  r.tolerance = tol;
  r.pass = r.relative_difference <= tol;
  return r;
}

}  // namespace qrbf
