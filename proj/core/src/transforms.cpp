#include "qrbf/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrbf/bases.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/quadrature.hpp"

namespace qrbf {

namespace {

constexpr int kMinInnerOrder = 8;

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

double prefactor(double nu, Normalization normalization) {
  const double base = std::sqrt(std::sqrt(nu / std::numbers::pi));
  return normalization == Normalization::unitary ? base : base * std::sqrt(nu / std::numbers::pi);
}

double literal_factor(double nu, Normalization normalization) {
  return normalization == Normalization::unitary ? 1.0 : std::sqrt(nu / std::numbers::pi);
}

bool same_rate(double a, double b) { return std::abs(a - b) <= 1e-14 * std::max(std::abs(a), std::abs(b)); }

L2Certificate require_certificate(const std::optional<L2Certificate>& c) {
  if (!c) throw WeightIncompatibleError("L2 callable has no decay certificate; cannot certify quadrature accuracy");
  if (!(c->gaussian_rate > 0.0) || c->poly_degree < 0) {
    throw WeightIncompatibleError("decay certificate needs a positive Gaussian rate and non-negative degree");
  }
  return *c;
}

// Quadrature-ready view of φ: the Gaussian envelope e^{−rate x²/2} is divided out and merged into the weight.
struct Envelope {
  L2Certificate cert;
  std::function<Quaternion(double)> fn;
};

std::optional<Envelope> quadrature_view(double nu, const L2Function& phi) {
  if (const auto* h = std::get_if<HermiteExpansion>(&phi)) {
    if (same_rate(h->nu, nu)) return std::nullopt;
    check_positive(h->nu, "Hermite expansion nu");
    const int n = std::max(0, static_cast<int>(h->coeffs.size()) - 1);
    return Envelope{{h->nu, n}, [h = *h](double x) { return h(x); }};
  }
  const auto& handle = std::get<L2Handle>(phi);
  return Envelope{require_certificate(handle.certificate), handle.fn};
}

int inner_order(const TransformOptions& opts, int required) {
  if (opts.order > 0) {
    if (opts.order > kMaxQuadratureOrder) throw std::invalid_argument("quadrature order above 512");
    if (required > 2 * opts.order - 1) {
      throw WeightIncompatibleError("transform integrand needs exact degree " + std::to_string(required) +
                                    "; quadrature order " + std::to_string(opts.order) + " is too small");
    }
    return opts.order;
  }
  const int order = std::max(kMinInnerOrder, required / 2 + 2);
  if (order > kMaxQuadratureOrder) {
    throw WeightIncompatibleError("transform integrand needs exact degree " + std::to_string(required) +
                                  ", beyond the largest supported rule");
  }
  return order;
}

struct SampledRule {
  QuadratureRule rule;
  std::vector<std::vector<Quaternion>> samples;  // per function in the group, p(x_n)
};

// Functions sharing one Gaussian rate: one reduced weight, one kernel evaluation per point.
struct RateGroup {
  double rate = 0.0;
  int poly_degree = 0;
  std::vector<std::size_t> members;
  std::map<int, SampledRule> rules;
};

const SampledRule& sampled_rule(RateGroup& group, const std::vector<Envelope>& views, double nu, int order) {
  auto it = group.rules.find(order);
  if (it != group.rules.end()) return it->second;
  SampledRule s{gauss_hermite(order, 0.5 * (nu + group.rate)), {}};
  for (const auto idx : group.members) {
    std::vector<Quaternion> v;
    v.reserve(s.rule.nodes.size());
    for (const double x : s.rule.nodes) v.push_back(views[idx].fn(x) * std::exp(0.5 * group.rate * x * x));
    s.samples.push_back(std::move(v));
  }
  return group.rules.emplace(order, std::move(s)).first->second;
}

}  // namespace

Quaternion HermiteExpansion::operator()(double x) const {
  if (coeffs.empty()) return {};
  const auto psi = hermite_psi_all(nu, static_cast<int>(coeffs.size()) - 1, x);
  Quaternion acc;
  for (std::size_t n = 0; n < coeffs.size(); ++n) acc += psi[n] * coeffs[n];
  return acc;
}

double HermiteExpansion::l2_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += norm2(c);
  return std::sqrt(s);
}

Complex HermiteExpansionD::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim) throw DimensionMismatch("point has the wrong dimension");
  Complex acc;
  for (const auto& [n, c] : coeffs) acc += hermite_psi_d(nu, n, x) * c;
  return acc;
}

double HermiteExpansionD::l2_norm() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

Quaternion sb_kernel(double nu, const Quaternion& q, double x, Normalization normalization) {
  check_positive(nu, "nu");
  const double c = prefactor(nu, normalization);
  const double s2 = std::numbers::sqrt2;
  return apply_on_slice(q, [&](Complex z) { return c * std::exp(-0.5 * nu * (z * z + x * x) + nu * s2 * z * x); });
}

Quaternion sb_kernel_series(double nu, const Quaternion& q, double x, int n_max) {
  check_positive(nu, "nu");
  if (n_max < 0 || n_max > kMaxBasisIndex) throw std::invalid_argument("series length must be in [0, 64]");
  const auto psi = hermite_psi_all(nu, n_max, x);
  return apply_on_slice(q, [&](Complex z) {
    Complex term = 1.0;
    Complex acc = psi[0];
    for (int n = 1; n <= n_max; ++n) {
      term *= std::sqrt(nu / n) * z;
      acc += term * psi[static_cast<std::size_t>(n)];
    }
    return acc;
  });
}

Quaternion rbf_sb_kernel(double gamma, const Quaternion& q, double x, Normalization normalization) {
  check_positive(gamma, "gamma");
  const double nu = 2.0 / (gamma * gamma);
  const double c = prefactor(nu, normalization);
  const double s2 = std::numbers::sqrt2;
  return apply_on_slice(q, [&](Complex z) {
    const Complex u = x - s2 * z;
    return c * std::exp(-u * u / (gamma * gamma));
  });
}

Quaternion rbf_sb_kernel_series(double gamma, const Quaternion& q, double x, int n_max) {
  check_positive(gamma, "gamma");
  if (n_max < 0 || n_max > kMaxBasisIndex) throw std::invalid_argument("series length must be in [0, 64]");
  const double nu = 2.0 / (gamma * gamma);
  const auto psi = hermite_psi_all(nu, n_max, x);
  return apply_on_slice(q, [&](Complex z) {
    Complex acc;
    for (int n = 0; n <= n_max; ++n) acc += rbf_basis_c(gamma, n, z) * psi[static_cast<std::size_t>(n)];
    return acc;
  });
}

QPowerSeries sb_image(double nu, const HermiteExpansion& phi) {
  check_positive(nu, "nu");
  if (!same_rate(phi.nu, nu)) throw std::invalid_argument("Hermite expansion parameter differs from the transform's");
  if (phi.coeffs.empty()) return {};
  std::vector<Quaternion> b(phi.coeffs.size());
  double c = 1.0;
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (n > 0) c *= std::sqrt(nu / static_cast<double>(n));
    b[n] = c * phi.coeffs[n];
  }
  return QPowerSeries(std::move(b));
}

RbfSeries rbf_sb_image(double gamma, const HermiteExpansion& phi) {
  check_positive(gamma, "gamma");
  return {gamma, sb_image(2.0 / (gamma * gamma), phi)};
}

std::vector<std::vector<Quaternion>> sb_transform_batch(double nu, std::span<const L2Function> phis,
                                                        std::span<const Quaternion> points,
                                                        Normalization normalization, TransformOptions opts) {
  check_positive(nu, "nu");
  std::vector<std::vector<Quaternion>> out(phis.size(), std::vector<Quaternion>(points.size()));
  std::vector<Envelope> views(phis.size());
  std::vector<RateGroup> groups;
  const double literal = literal_factor(nu, normalization);

  for (std::size_t f = 0; f < phis.size(); ++f) {
    auto view = quadrature_view(nu, phis[f]);
    if (!view) {
      const auto image = sb_image(nu, std::get<HermiteExpansion>(phis[f]));
      for (std::size_t p = 0; p < points.size(); ++p) out[f][p] = image(points[p]) * literal;
      continue;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const RateGroup& g) { return g.rate == view->cert.gaussian_rate; });
    if (it == groups.end()) {
      groups.push_back(RateGroup{view->cert.gaussian_rate, 0, {}, {}});
      it = groups.end() - 1;
    }
    it->poly_degree = std::max(it->poly_degree, view->cert.poly_degree);
    it->members.push_back(f);
    views[f] = std::move(*view);
  }

  const double c = prefactor(nu, normalization);
  const double s2 = std::numbers::sqrt2;
  for (auto& group : groups) {
    const double nu_r = 0.5 * (nu + group.rate);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const SlicePoint sp = slice_decompose(points[p]);
      const Complex z = sp.to_complex();
      const int required = required_degree({group.poly_degree, nu * s2 * std::abs(z)}, {}, nu_r);
      const auto& sampled = sampled_rule(group, views, nu, inner_order(opts, required));
      const auto m = sampled.rule.nodes.size();
      // Residual kernel after the weight: c e^{−νz²/2} e^{ν√2 z x}.
      std::vector<Quaternion> k(m);
      const Complex head = c * std::exp(-0.5 * nu * z * z);
      for (std::size_t n = 0; n < m; ++n) {
        const double x = sampled.rule.nodes[n];
        k[n] = sp.unit.embed(head * std::exp(nu * s2 * z * x) * sampled.rule.weights[n]);
      }
      for (std::size_t g = 0; g < group.members.size(); ++g) {
        CompensatedSum<Quaternion> acc;
        const auto& v = sampled.samples[g];
        for (std::size_t n = 0; n < m; ++n) acc.add(k[n] * v[n]);
        out[group.members[g]][p] = acc.value();
      }
    }
  }
  return out;
}

Quaternion sb_transform(double nu, const L2Function& phi, const Quaternion& q, Normalization normalization,
                        TransformOptions opts) {
  return sb_transform_batch(nu, std::span<const L2Function>(&phi, 1), std::span<const Quaternion>(&q, 1),
                            normalization, opts)[0][0];
}

Quaternion rbf_sb_transform(double gamma, const L2Function& phi, const Quaternion& q, Normalization normalization,
                            TransformOptions opts) {
  check_positive(gamma, "gamma");
  return intrinsic_exp_sq(gamma, q, -1) * sb_transform(2.0 / (gamma * gamma), phi, q, normalization, opts);
}

std::optional<GrowthCertificate> sb_image_certificate(double nu, const L2Function& phi) {
  if (const auto* h = std::get_if<HermiteExpansion>(&phi)) {
    if (!same_rate(h->nu, nu)) return std::nullopt;
    return GrowthCertificate{std::max(0, static_cast<int>(h->coeffs.size()) - 1), 0.0};
  }
  const auto& c = std::get<L2Handle>(phi).certificate;
  if (!c || !same_rate(c->gaussian_rate, nu)) return std::nullopt;
  return GrowthCertificate{c->poly_degree, 0.0};
}

SliceHandle sb_transform_handle(double nu, L2Function phi, Normalization normalization, TransformOptions opts) {
  auto cert = sb_image_certificate(nu, phi);
  return {[nu, phi = std::move(phi), normalization, opts](const Quaternion& q) {
            return sb_transform(nu, phi, q, normalization, opts);
          },
          cert};
}

SliceHandle rbf_sb_transform_handle(double gamma, L2Function phi, Normalization normalization,
                                    TransformOptions opts) {
  check_positive(gamma, "gamma");
  auto cert = sb_image_certificate(2.0 / (gamma * gamma), phi);
  return {[gamma, phi = std::move(phi), normalization, opts](const Quaternion& q) {
            return rbf_sb_transform(gamma, phi, q, normalization, opts);
          },
          cert};
}

// ---- C^d -------------------------------------------------------------------------------------------

Complex sb_kernel_d(double nu, std::span<const Complex> z, std::span<const double> x) {
  check_positive(nu, "nu");
  if (z.size() != x.size()) throw DimensionMismatch("z and x must have the same dimension");
  Complex e;
  for (std::size_t l = 0; l < z.size(); ++l) {
    e += -0.5 * nu * (z[l] * z[l] + x[l] * x[l]) + nu * std::numbers::sqrt2 * z[l] * x[l];
  }
  return std::pow(nu / std::numbers::pi, 0.25 * static_cast<double>(z.size())) * std::exp(e);
}

Complex rbf_sb_kernel_d(double gamma, std::span<const Complex> z, std::span<const double> x) {
  check_positive(gamma, "gamma");
  if (z.size() != x.size()) throw DimensionMismatch("z and x must have the same dimension");
  const double nu = 2.0 / (gamma * gamma);
  Complex e;
  for (std::size_t l = 0; l < z.size(); ++l) {
    const Complex u = std::numbers::sqrt2 * z[l] - x[l];
    e += u * u;
  }
  return std::pow(nu / std::numbers::pi, 0.25 * static_cast<double>(z.size())) * std::exp(-e / (gamma * gamma));
}

CPowerSeries sb_image_d(double nu, const HermiteExpansionD& phi) {
  check_positive(nu, "nu");
  if (!same_rate(phi.nu, nu)) throw std::invalid_argument("Hermite expansion parameter differs from the transform's");
  CPowerSeries out(phi.dim);
  for (const auto& [n, c] : phi.coeffs) {
    if (n.dim() != phi.dim) throw DimensionMismatch("multi-index dimension differs from the expansion's");
    double s = 1.0;
    for (int l = 0; l < n.dim(); ++l) {
      for (int k = 1; k <= n[static_cast<std::size_t>(l)]; ++k) s *= std::sqrt(nu / k);
    }
    out.set(n, s * c);
  }
  return out;
}

RbfCSeries rbf_sb_image_d(double gamma, const HermiteExpansionD& phi) {
  check_positive(gamma, "gamma");
  return {gamma, sb_image_d(2.0 / (gamma * gamma), phi)};
}

std::vector<std::vector<Complex>> sb_transform_batch_d(double nu, int dim, std::span<const L2FunctionD> phis,
                                                       std::span<const Complex> points, TransformOptions opts) {
  check_positive(nu, "nu");
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  const auto d = static_cast<std::size_t>(dim);
  if (points.size() % d != 0) throw DimensionMismatch("point buffer is not a multiple of the dimension");
  const std::size_t npts = points.size() / d;
  std::vector<std::vector<Complex>> out(phis.size(), std::vector<Complex>(npts));

  struct Member {
    std::size_t index;
    L2Certificate cert;
    std::function<Complex(std::span<const double>)> fn;
  };
  std::vector<Member> quad;
  for (std::size_t f = 0; f < phis.size(); ++f) {
    if (const auto* h = std::get_if<HermiteExpansionD>(&phis[f])) {
      if (h->dim != dim) throw DimensionMismatch("function dimension differs from the points'");
      if (same_rate(h->nu, nu)) {
        const auto image = sb_image_d(nu, *h);
        for (std::size_t p = 0; p < npts; ++p) out[f][p] = image(points.subspan(p * d, d));
        continue;
      }
      int deg = 0;
      for (const auto& [n, c] : h->coeffs) deg = std::max(deg, n.max_entry());
      quad.push_back({f, {h->nu, deg}, [h = *h](std::span<const double> x) { return h(x); }});
    } else {
      const auto& handle = std::get<L2HandleD>(phis[f]);
      if (handle.dim != dim) throw DimensionMismatch("function dimension differs from the points'");
      const auto cert = require_certificate(handle.certificate);
      quad.push_back({f, cert, handle.fn});
    }
  }

  const double c = std::pow(nu / std::numbers::pi, 0.25 * dim);
  const double s2 = std::numbers::sqrt2;
  for (const auto& member : quad) {
    const double rate = member.cert.gaussian_rate;
    const double nu_r = 0.5 * (nu + rate);
    std::map<int, std::pair<QuadratureRule, std::vector<Complex>>> cache;
    for (std::size_t p = 0; p < npts; ++p) {
      const auto z = points.subspan(p * d, d);
      double zmax = 0.0;
      for (const auto& zl : z) zmax = std::max(zmax, std::abs(zl));
      const int order = inner_order(opts, required_degree({member.cert.poly_degree, nu * s2 * zmax}, {}, nu_r));
      check_tensor_budget(order, dim);
      auto it = cache.find(order);
      if (it == cache.end()) {
        auto rule = gauss_hermite(order, nu_r);
        std::vector<Complex> samples;
        const auto m = static_cast<std::size_t>(order);
        std::vector<std::size_t> idx(d, 0);
        std::vector<double> x(d);
        while (true) {
          double r2 = 0.0;
          for (std::size_t l = 0; l < d; ++l) {
            x[l] = rule.nodes[idx[l]];
            r2 += x[l] * x[l];
          }
          samples.push_back(member.fn(x) * std::exp(0.5 * rate * r2));
          std::size_t l = d;
          while (l > 0) {
            if (++idx[l - 1] < m) break;
            idx[l - 1] = 0;
            --l;
          }
          if (l == 0) break;
        }
        it = cache.emplace(order, std::make_pair(std::move(rule), std::move(samples))).first;
      }
      const auto& [rule, samples] = it->second;
      const auto m = rule.nodes.size();
      // Per-coordinate residual kernels w_a e^{ν√2 z_ℓ x_a}; the tensor sum runs in odometer order.
      std::vector<std::vector<Complex>> k(d, std::vector<Complex>(m));
      Complex z2;
      for (std::size_t l = 0; l < d; ++l) {
        z2 += z[l] * z[l];
        for (std::size_t a = 0; a < m; ++a) k[l][a] = rule.weights[a] * std::exp(nu * s2 * z[l] * rule.nodes[a]);
      }
      CompensatedSum<Complex> acc;
      std::vector<std::size_t> idx(d, 0);
      for (const auto& s : samples) {
        Complex term = s;
        for (std::size_t l = 0; l < d; ++l) term *= k[l][idx[l]];
        acc.add(term);
        for (std::size_t l = d; l-- > 0;) {
          if (++idx[l] < m) break;
          idx[l] = 0;
        }
      }
      out[member.index][p] = c * std::exp(-0.5 * nu * z2) * acc.value();
    }
  }
  return out;
}

Complex sb_transform_d(double nu, const L2FunctionD& phi, std::span<const Complex> z, TransformOptions opts) {
  return sb_transform_batch_d(nu, static_cast<int>(z.size()), std::span<const L2FunctionD>(&phi, 1), z, opts)[0][0];
}

Complex rbf_sb_transform_d(double gamma, const L2FunctionD& phi, std::span<const Complex> z, TransformOptions opts) {
  check_positive(gamma, "gamma");
  Complex z2;
  for (const auto& c : z) z2 += c * c;
  return std::exp(-z2 / (gamma * gamma)) * sb_transform_d(2.0 / (gamma * gamma), phi, z, opts);
}

}  // namespace qrbf
