#include "qrbf/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qrbf/bases.hpp"
#include "qrbf/gram.hpp"
#include "qrbf/spaces.hpp"
#include "qrbf/transforms.hpp"

namespace qrbf {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

CheckPart part(std::string label, double value, double bound, bool informational = false) {
  return {std::move(label), value, bound, value <= bound, informational};
}

CheckResult finish(CheckResult r, Clock::time_point start) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = false;
  double worst = -INFINITY;
  bool any = false;
  bool all = true;
  for (const auto& p : r.parts) {
    if (p.informational) continue;
    any = true;
    all = all && p.pass;
    const double ratio = std::isnan(p.value) ? INFINITY : p.value / p.bound;
    if (ratio > worst) {
      worst = ratio;
      r.value = p.value;
      r.bound = p.bound;
    }
  }
  r.pass = any && all;
  return r;
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Rng make_rng(const AcceptanceConfig& cfg, int check) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(check)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Quaternion random_quaternion(Rng& rng) {
  return {uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
}

Quaternion random_point(Rng& rng, double radius) {
  Quaternion q = random_quaternion(rng);
  const double a = abs(q);
  return a > 0.0 ? q * (uniform(rng, 0.0, radius) / a) : q;
}

Complex random_complex(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  const double t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return std::polar(r, t);
}

// Fock-side coefficients with each term of unit-order norm: b_n = u_n √(νⁿ/n!).
QPowerSeries random_fock_series(Rng& rng, double nu, int degree) {
  std::vector<Quaternion> b(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) b[static_cast<std::size_t>(n)] = random_quaternion(rng) * std::sqrt(std::pow(nu, n) / factorial(n));
  return QPowerSeries(std::move(b));
}

CPowerSeries random_fock_series_d(Rng& rng, double nu, int dim, int max_total) {
  CPowerSeries s(dim);
  for (const auto& n : graded_indices(dim, max_total)) {
    s.set(n, random_complex(rng, 1.0) * std::sqrt(std::pow(nu, n.total()) / n.factorial()));
  }
  return s;
}

template <class T>
double identity_defect(const std::vector<T>& g, std::size_t n, double diag = 1.0) {
  double e = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const T d = g[a * n + b] - T(a == b ? diag : 0.0);
      if constexpr (std::is_same_v<T, Quaternion>) {
        e = std::max(e, abs(d));
      } else {
        e = std::max(e, std::abs(d));
      }
    }
  }
  return e;
}

ImaginaryUnit diagonal_unit() { return ImaginaryUnit::normalized({0.0, 1.0, 1.0, 1.0}); }

// (ν/π) Σ w |f(q)|² e^{−4y²/γ²} e^{ν|q|²}: the RBF-weight integral with the Gaussian rule's weight divided out.
double direct_rbf_norm(double gamma, const RbfSeries& f, int order) {
  const double nu = 2.0 / (gamma * gamma);
  const auto grid = quadrature_grid(FockSlice{nu, ImaginaryUnit::i()}, order);
  CompensatedSum<double> acc;
  for (std::size_t n = 0; n < grid.points.size(); ++n) {
    const Quaternion& q = grid.points[n];
    const double y2 = q.i * q.i + q.j * q.j + q.k * q.k;
    const double x2 = q.r * q.r;
    acc.add(grid.weights[n] * norm2(f(q)) * std::exp(-4.0 * y2 / (gamma * gamma) + nu * (x2 + y2)));
  }
  return std::sqrt(nu / std::numbers::pi * acc.value());
}

}  // namespace

std::vector<std::string_view> tolerance_names() {
  return {"fock_orthogonality", "rbf_orthonormality", "isometry",      "reproducing",        "kernel_sum",
          "diagonal",           "pointwise_bound",    "sequential",    "beta",               "factorization",
          "sb_unitarity",       "kernel_match",       "kernel_series", "slice_independence", "psd",
          "homomorphism"};
}

void set_tolerance(AcceptanceTolerances& tol, std::string_view name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw std::invalid_argument("tolerance must be positive");
  double* slots[] = {&tol.fock_orthogonality, &tol.rbf_orthonormality, &tol.isometry,      &tol.reproducing,
                     &tol.kernel_sum,         &tol.diagonal,           &tol.pointwise_bound, &tol.sequential,
                     &tol.beta,               &tol.factorization,      &tol.sb_unitarity,  &tol.kernel_match,
                     &tol.kernel_series,      &tol.slice_independence, &tol.psd,           &tol.homomorphism};
  const auto names = tolerance_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      *slots[i] = value;
      return;
    }
  }
  throw std::invalid_argument("unknown tolerance '" + std::string(name) + "'");
}

CheckResult check_fock_orthogonality(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  CheckResult r{"fock_orthogonality", "monomials q^n are orthogonal in the slice Fock space with norm^2 n!/nu^n",
                "nu in {0.5, 2, 8}; m, n <= 12; M = " + std::to_string(cfg.quad_order), 0, 0, false, 0, {}};
  std::vector<FockSliceFunction> fs;
  for (int n = 0; n <= 12; ++n) fs.emplace_back(QPowerSeries::monomial(n));
  for (double nu : {0.5, 2.0, 8.0}) {
    const auto g = gram_matrix(FockSlice{nu, ImaginaryUnit::i()}, fs, {cfg.quad_order});
    double err = 0.0;
    for (std::size_t m = 0; m < fs.size(); ++m) {
      for (std::size_t n = 0; n < fs.size(); ++n) {
        const double nm = factorial(static_cast<int>(m)) / std::pow(nu, static_cast<double>(m));
        const double nn = factorial(static_cast<int>(n)) / std::pow(nu, static_cast<double>(n));
        const Quaternion expected = m == n ? nm : 0.0;
        err = std::max(err, abs(g[m * fs.size() + n] - expected) / std::sqrt(nm * nn));
      }
    }
    r.parts.push_back(part("nu=" + num(nu), err, cfg.tol.fock_orthogonality));
  }
  return finish(std::move(r), start);
}

CheckResult check_rbf_orthonormality(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  CheckResult r{"rbf_orthonormality", "e_n^gamma form an orthonormal set in the RBF spaces",
                "gamma in {0.5, 1, 2}; 13 functions; slices i and (i+j+k)/sqrt3; C^1 and C^2", 0, 0, false, 0, {}};
  const auto indices2 = graded_indices(2, 4);
  for (double gamma : {0.5, 1.0, 2.0}) {
    std::vector<RbfSliceFunction> qs;
    for (int n = 0; n <= 12; ++n) {
      qs.emplace_back(SliceHandle{[gamma, n](const Quaternion& q) { return rbf_basis_q(gamma, n, q); },
                                  GrowthCertificate{n, 0.0}});
    }
    for (const auto& unit : {ImaginaryUnit::i(), diagonal_unit()}) {
      const auto g = gram_matrix(RbfSlice{KernelParams(gamma), unit}, qs, {cfg.quad_order});
      const std::string label = unit == ImaginaryUnit::i() ? "slice i" : "slice (i+j+k)/sqrt3";
      r.parts.push_back(part("gamma=" + num(gamma) + " " + label, identity_defect(g, qs.size()), cfg.tol.rbf_orthonormality));
    }
    std::vector<RbfCFunction> c1;
    for (int n = 0; n <= 12; ++n) {
      c1.emplace_back(CHandle{[gamma, n](std::span<const Complex> z) { return rbf_basis_d(gamma, MultiIndex{n}, z); },
                              GrowthCertificate{n, 0.0}});
    }
    const auto g1 = gram_matrix(RbfC{KernelParams(gamma), 1}, c1);
    r.parts.push_back(part("gamma=" + num(gamma) + " d=1", identity_defect(g1, c1.size()), cfg.tol.rbf_orthonormality));
    std::vector<RbfCFunction> c2;
    for (std::size_t t = 0; t < 13; ++t) {
      const MultiIndex n = indices2[t];
      c2.emplace_back(CHandle{[gamma, n](std::span<const Complex> z) { return rbf_basis_d(gamma, n, z); },
                              GrowthCertificate{n.max_entry(), 0.0}});
    }
    const auto g2 = gram_matrix(RbfC{KernelParams(gamma), 2}, c2);
    r.parts.push_back(part("gamma=" + num(gamma) + " d=2", identity_defect(g2, c2.size()), cfg.tol.rbf_orthonormality));
  }
  return finish(std::move(r), start);
}

CheckResult check_isometry(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"isometry", "multiplication by e^{q^2/gamma^2} is an isometry from the RBF space onto the Fock space",
                "gamma = " + num(gamma) + "; 100 random series of Fock degree <= 24; M = " + std::to_string(cfg.quad_order),
                0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 3);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto g = random_fock_series(rng, nu, uniform_int(rng, 0, 24));
    // f is held by its own Taylor coefficients; M^{γ²} rebuilds the Fock side from them.
    const QPowerSeries f_taylor(gaussian_multiply_coeffs(gamma, -1, g.coeffs(), kMaxSeriesDegree));
    const auto image = m_operator(gamma, 1, f_taylor, 24);
    const double lhs = norm(FockSlice{nu, ImaginaryUnit::i()}, image, {cfg.quad_order});
    const double rhs = direct_rbf_norm(gamma, RbfSeries{gamma, g}, cfg.quad_order);
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  r.parts.push_back(part("max relative norm difference", worst, cfg.tol.isometry));
  return finish(std::move(r), start);
}

CheckResult check_reproducing(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"reproducing", "<f, K_w> = f(w) in the Fock and RBF spaces, slice and C^d",
                "gamma = " + num(gamma) + "; 20 pairs per space; slices |w| <= 1.5; C^2 |w_l| <= 1", 0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 4);
  auto rel = [](double diff, double mag) { return diff / (1.0 + mag); };
  const QuadOptions slice_opts{cfg.quad_order};

  double e_fs = 0.0, e_rs = 0.0, e_fc = 0.0, e_rc = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto f = random_fock_series(rng, nu, uniform_int(rng, 0, 10));
    const Quaternion w = random_point(rng, 1.5);
    const Quaternion fw = f(w);
    e_fs = std::max(e_fs, rel(abs(reproduce(FockSlice{nu, ImaginaryUnit::i()}, f, w, slice_opts) - fw), abs(fw)));
  }
  for (int t = 0; t < 20; ++t) {
    const RbfSeries f{gamma, random_fock_series(rng, nu, uniform_int(rng, 0, 10))};
    const Quaternion w = random_point(rng, 1.5);
    const Quaternion fw = f(w);
    e_rs = std::max(e_rs, rel(abs(reproduce(RbfSlice{KernelParams(gamma), ImaginaryUnit::i()}, f, w, slice_opts) - fw), abs(fw)));
  }
  for (int t = 0; t < 20; ++t) {
    const auto f = random_fock_series_d(rng, nu, 2, 6);
    const std::vector<Complex> w{random_complex(rng, 1.0), random_complex(rng, 1.0)};
    const Complex fw = f(w);
    e_fc = std::max(e_fc, rel(std::abs(reproduce(FockC{nu, 2}, f, w) - fw), std::abs(fw)));
  }
  for (int t = 0; t < 20; ++t) {
    const RbfCSeries f{gamma, random_fock_series_d(rng, nu, 2, 6)};
    const std::vector<Complex> w{random_complex(rng, 1.0), random_complex(rng, 1.0)};
    const Complex fw = f(w);
    e_rc = std::max(e_rc, rel(std::abs(reproduce(RbfC{KernelParams(gamma), 2}, f, w) - fw), std::abs(fw)));
  }
  r.parts.push_back(part("Fock slice", e_fs, cfg.tol.reproducing));
  r.parts.push_back(part("RBF slice", e_rs, cfg.tol.reproducing));
  r.parts.push_back(part("Fock C^2", e_fc, cfg.tol.reproducing));
  r.parts.push_back(part("RBF C^2", e_rc, cfg.tol.reproducing));
  return finish(std::move(r), start);
}

CheckResult check_kernel_sum(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = 1.0;
  const double nu = 2.0;
  constexpr int kTerms = 40;
  CheckResult r{"kernel_sum", "sum_n e_n(q) e_n(conj p) equals the slice RBF kernel",
                "gamma = 1; N = 40; 50 random pairs with |q|, |p| <= 1.5", 0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 5);
  double worst_abs = 0.0;
  double worst_excess = -INFINITY;
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = random_point(rng, 1.5);
    const Quaternion p = random_point(rng, 1.5);
    const double diff = abs(rbf_kernel_qslice(gamma, q, p) - kernel_sum_truncated(gamma, q, p, kTerms));
    const double tail = kernel_sum_tail_bound(gamma, q, p, kTerms);
    // Rounding allowance: a few ulps of Σ|terms| ≤ |e^{−q²}| |e^{−p̄²}| e^{ν|q||p|}.
    const double mag = abs(intrinsic_exp_sq(gamma, q, -1)) * abs(intrinsic_exp_sq(gamma, conj(p), -1)) *
                       std::exp(nu * abs(q) * abs(p));
    const double allowance = 64.0 * std::numeric_limits<double>::epsilon() * mag;
    worst_abs = std::max(worst_abs, diff);
    worst_excess = std::max(worst_excess, diff - (tail + allowance));
  }
  r.parts.push_back(part("max |K - S_40|", worst_abs, cfg.tol.kernel_sum));
  r.parts.push_back(part("max excess over tail bound + rounding", worst_excess, 0.0));
  // A zero bound makes the ratio meaningless; keep the absolute part as the headline.
  r.parts.back().bound = 0.0;
  r.parts.back().pass = worst_excess <= 0.0;
  auto out = finish(std::move(r), start);
  out.value = worst_abs;
  out.bound = cfg.tol.kernel_sum;
  return out;
}

CheckResult check_diagonal_and_bound(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"diagonal_and_bound", "K(q,q) = e^{4y^2/gamma^2} and |f(q)| <= e^{2y^2/gamma^2} ||f||",
                "gamma = " + num(gamma) + "; grid |x|, |y| <= 2 (21 x 21); slices i and (i+j+k)/sqrt3", 0, 0, false, 0, {}};
  std::vector<double> axis;
  for (int t = 0; t <= 20; ++t) axis.push_back(-2.0 + 0.2 * t);
  double diag = 0.0;
  for (const auto& unit : {ImaginaryUnit::i(), diagonal_unit()}) {
    for (double x : axis) {
      for (double y : axis) {
        const Quaternion q = unit.embed({x, y});
        const double expected = std::exp(4.0 * y * y / (gamma * gamma));
        diag = std::max(diag, abs(rbf_kernel_qslice(gamma, q, q) - expected) / expected);
      }
    }
  }
  r.parts.push_back(part("diagonal relative error", diag, cfg.tol.diagonal));

  std::vector<Quaternion> grid;
  for (double x : axis) {
    for (double y : axis) grid.push_back(ImaginaryUnit::i().embed({x, y}));
  }
  auto rng = make_rng(cfg, 6);
  double worst = 0.0;
  const QuadOptions opts{cfg.quad_order};
  for (const Quaternion& p : {Quaternion{0.0}, Quaternion{1.0, 1.0, 0.0, 0.0}, Quaternion{-0.6, 2.0, 0.0, 0.0}, Quaternion{2.0, -2.0, 0.0, 0.0},
                              Quaternion{0.4, 0.0, 1.2, 0.0}}) {
    worst = std::max(worst, pointwise_bound_check(gamma, kernel_section(gamma, p), grid, opts).max_ratio);
  }
  for (int t = 0; t < 10; ++t) {
    worst = std::max(worst, pointwise_bound_check(gamma, RbfSeries{gamma, random_fock_series(rng, nu, 6)}, grid, opts).max_ratio);
  }
  r.parts.push_back(part("max bound ratio - 1", worst - 1.0, cfg.tol.pointwise_bound));
  return finish(std::move(r), start);
}

CheckResult check_sequential(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  constexpr int kK = 24;
  CheckResult r{"sequential", "||f||^2 = sum_k k! gamma^{2k} / 2^k |beta_k|^2 with beta the Fock-side coefficients",
                "gamma = " + num(gamma) + "; 50 random series, K = 24; beta vs Cauchy product for gamma in {0.5, 1, 2}",
                0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 7);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto g = random_fock_series(rng, nu, uniform_int(rng, 0, 20));
    const auto a = gaussian_multiply_coeffs(gamma, -1, g.coeffs(), kMaxSeriesDegree);
    const double seq = std::sqrt(sequential_norm(gamma, a, kK));
    const double quad = norm(RbfSlice{KernelParams(gamma), ImaginaryUnit::i()}, RbfSeries{gamma, g}, {cfg.quad_order});
    worst = std::max(worst, std::abs(seq - quad) / quad);
  }
  r.parts.push_back(part("sequential vs quadrature norm", worst, cfg.tol.sequential));

  for (double gm : {0.5, 1.0, 2.0}) {
    std::vector<Quaternion> a(31);
    for (auto& c : a) c = random_quaternion(rng);
    constexpr int kTop = 40;
    const auto beta = beta_coeffs(gm, a, kTop);
    const auto cauchy = qseries_cauchy_mul(gaussian_series(gm, 1, kTop), QPowerSeries(a), kTop);
    double err = 0.0;
    for (int k = 0; k <= kTop; ++k) {
      double scale = 0.0;
      for (int j = 0; 2 * j <= k; ++j) {
        const int n = k - 2 * j;
        if (n < static_cast<int>(a.size())) scale += abs(a[static_cast<std::size_t>(n)]) / (std::pow(gm, 2.0 * j) * factorial(j));
      }
      if (scale > 0.0) err = std::max(err, abs(beta[static_cast<std::size_t>(k)] - cauchy.coeff(k)) / scale);
    }
    r.parts.push_back(part("beta vs Cauchy gamma=" + num(gm), err, cfg.tol.beta));
  }
  return finish(std::move(r), start);
}

CheckResult check_factorizations(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"factorizations", "K_{gamma,d} is the product of 1-D kernels and e^{-z^2/gamma^2} F(z,w) e^{-conj(w)^2/gamma^2}",
                "gamma = " + num(gamma) + "; d = 3; 50 random pairs with |z_l|, |w_l| <= 1", 0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 8);
  double e_prod = 0.0;
  double e_fock = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> z(3), w(3);
    for (auto& c : z) c = random_complex(rng, 1.0);
    for (auto& c : w) c = random_complex(rng, 1.0);
    const Complex k = rbf_kernel_d(gamma, z, w);
    Complex prod = 1.0;
    Complex zz, ww;
    for (std::size_t l = 0; l < 3; ++l) {
      prod *= rbf_kernel_c(gamma, z[l], w[l]);
      zz += z[l] * z[l];
      ww += std::conj(w[l]) * std::conj(w[l]);
    }
    const Complex fock = std::exp(-zz / (gamma * gamma)) * fock_kernel_d(nu, z, w) * std::exp(-ww / (gamma * gamma));
    e_prod = std::max(e_prod, std::abs(k - prod) / std::abs(k));
    e_fock = std::max(e_fock, std::abs(k - fock) / std::abs(k));
  }
  r.parts.push_back(part("product of 1-D kernels", e_prod, cfg.tol.factorization));
  r.parts.push_back(part("Fock kernel factorization", e_fock, cfg.tol.factorization));
  return finish(std::move(r), start);
}

CheckResult check_sb_unitarity(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  const bool literal = cfg.normalization == Normalization::paper_literal;
  CheckResult r{"sb_unitarity", "the RBF Segal-Bargmann transform maps {psi_n} to an orthonormal set",
                "gamma = " + num(gamma) + "; d = 1 n <= 10 (quadrature path, M = " + std::to_string(cfg.quad_order) +
                    "); d = 2 |n| <= 4; normalization " + (literal ? "paper-literal" : "unitary"),
                0, 0, false, 0, {}};

  std::vector<RbfSliceFunction> images;
  for (int n = 0; n <= 10; ++n) {
    L2Handle psi{[nu, n](double x) { return Quaternion{hermite_psi(nu, n, x)}; }, L2Certificate{nu, n}};
    images.emplace_back(rbf_sb_transform_handle(gamma, std::move(psi), cfg.normalization));
  }
  const auto g1 = gram_matrix(RbfSlice{KernelParams(gamma), ImaginaryUnit::i()}, images, {cfg.quad_order});
  const double offset = nu / std::numbers::pi;
  if (literal) {
    r.parts.push_back(part("d=1 Gram vs (nu/pi) I", identity_defect(g1, images.size(), offset), cfg.tol.sb_unitarity));
    r.parts.push_back(part("d=1 image norm sqrt(G_00) (expected sqrt(nu/pi) = " + num(std::sqrt(offset)) + ")",
                           std::sqrt(g1[0].r), INFINITY, true));
  } else {
    r.parts.push_back(part("d=1 Gram vs I", identity_defect(g1, images.size()), cfg.tol.sb_unitarity));
  }

  // On C^d the Gram is taken on the Fock side, which the multiplication isometry identifies with H_{γ,d}.
  std::vector<L2FunctionD> phis;
  std::vector<GrowthCertificate> certs;
  for (const auto& n : graded_indices(2, 4)) {
    phis.emplace_back(L2HandleD{2, [nu, n](std::span<const double> x) { return Complex{hermite_psi_d(nu, n, x)}; },
                                L2Certificate{nu, n.max_entry()}});
    certs.push_back({n.max_entry(), 0.0});
  }
  const FockC space{nu, 2};
  const auto grid = quadrature_grid(space, quadrature_order(space, certs));
  const auto values = sb_transform_batch_d(nu, 2, phis, grid.points);
  const auto g2 = gram_from_samples(space, grid, values);
  r.parts.push_back(part("d=2 Gram vs I", identity_defect(g2, phis.size()), cfg.tol.sb_unitarity));
  return finish(std::move(r), start);
}

CheckResult check_kernel_match(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"kernel_match", "RBF-SB kernel = e^{-q^2/gamma^2} x SB kernel = sum_n e_n(q) psi_n(x)",
                "gamma = " + num(gamma) + "; 50 random (q, x), |q| <= 1.5, |x| <= 3; series N = 40", 0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 10);
  double e_match = 0.0;
  double e_series = 0.0;
  double e_sb_series = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = random_point(rng, 1.5);
    const double x = uniform(rng, -3.0, 3.0);
    const Quaternion closed = rbf_sb_kernel(gamma, q, x, cfg.normalization);
    const Quaternion factored = intrinsic_exp_sq(gamma, q, -1) * sb_kernel(nu, q, x, cfg.normalization);
    e_match = std::max(e_match, abs(closed - factored) / abs(closed));
    const Quaternion unitary = rbf_sb_kernel(gamma, q, x);
    e_series = std::max(e_series, abs(unitary - rbf_sb_kernel_series(gamma, q, x, 40)) / std::max(1.0, abs(unitary)));
    const Quaternion sb = sb_kernel(nu, q, x);
    e_sb_series = std::max(e_sb_series, abs(sb - sb_kernel_series(nu, q, x, 40)) / std::max(1.0, abs(sb)));
  }
  r.parts.push_back(part("closed form vs factored", e_match, cfg.tol.kernel_match));
  r.parts.push_back(part("RBF-SB closed form vs series", e_series, cfg.tol.kernel_series));
  r.parts.push_back(part("SB closed form vs series", e_sb_series, cfg.tol.kernel_series));
  return finish(std::move(r), start);
}

CheckResult check_slice_independence(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  const double gamma = cfg.gamma;
  const double nu = 2.0 / (gamma * gamma);
  CheckResult r{"slice_independence", "the RBF slice norm does not depend on the slice",
                "gamma = " + num(gamma) + "; 20 random series; slices i and (i+j)/sqrt2", 0, 0, false, 0, {}};
  auto rng = make_rng(cfg, 11);
  const auto unit_j = ImaginaryUnit::normalized({0.0, 1.0, 1.0, 0.0});
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RbfSeries f{gamma, random_fock_series(rng, nu, uniform_int(rng, 0, 12))};
    const auto rep = slice_independence_check(gamma, f, ImaginaryUnit::i(), unit_j, cfg.tol.slice_independence,
                                              {cfg.quad_order});
    worst = std::max(worst, rep.relative_difference);
  }
  r.parts.push_back(part("max relative norm difference", worst, cfg.tol.slice_independence));
  return finish(std::move(r), start);
}

CheckResult check_psd(const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  CheckResult r{"psd", "Gaussian RBF Gram matrices are positive semidefinite; chi is multiplicative",
                "gamma = " + num(cfg.gamma) + "; N = 16 points in [-1, 1]^3; 20 random 2x2 quaternion pairs", 0, 0,
                false, 0, {}};
  auto rng = make_rng(cfg, 12);
  RealPoints pts(16, std::vector<double>(3));
  for (auto& p : pts) {
    for (auto& v : p) v = uniform(rng, -1.0, 1.0);
  }
  const auto g = build_gram(KernelId::gaussian, GramParams{cfg.gamma}, pts);
  const auto rep = psd_check(g, cfg.tol.psd);
  r.parts.push_back(part("-(min eigenvalue)", -rep.min_eigenvalue, cfg.tol.psd));

  double hom = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Quaternion> p(4), q(4), pq(4);
    for (auto& v : p) v = random_quaternion(rng);
    for (auto& v : q) v = random_quaternion(rng);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) pq[a * 2 + b] = p[a * 2] * q[b] + p[a * 2 + 1] * q[2 + b];
    }
    const Eigen::MatrixXcd lhs = quat_matrix_to_complex(pq, 2);
    const Eigen::MatrixXcd rhs = quat_matrix_to_complex(p, 2) * quat_matrix_to_complex(q, 2);
    hom = std::max(hom, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  r.parts.push_back(part("chi homomorphism defect", hom, cfg.tol.homomorphism));

  QuaternionPoints qp(8);
  for (auto& v : qp) v = random_point(rng, 1.0);
  const auto qrep = psd_check(build_gram(KernelId::qslice, GramParams{cfg.gamma}, qp), cfg.tol.psd);
  r.parts.push_back(part("slice kernel Gram -(min eigenvalue of chi)", -qrep.min_eigenvalue, cfg.tol.psd, true));
  return finish(std::move(r), start);
}

std::vector<CheckResult> run_acceptance(const AcceptanceConfig& cfg) {
  return {check_fock_orthogonality(cfg), check_rbf_orthonormality(cfg), check_isometry(cfg),
          check_reproducing(cfg),        check_kernel_sum(cfg),         check_diagonal_and_bound(cfg),
          check_sequential(cfg),         check_factorizations(cfg),     check_sb_unitarity(cfg),
          check_kernel_match(cfg),       check_slice_independence(cfg), check_psd(cfg)};
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.parts) {
    parts.push_back({{"label", p.label}, {"value", p.value}, {"bound", p.bound}, {"pass", p.pass},
                     {"informational", p.informational}});
  }
  return {{"name", r.name},   {"anchor", r.anchor}, {"params", r.params}, {"value", r.value},
          {"bound", r.bound}, {"pass", r.pass},     {"parts", parts}};
}

}  // namespace qrbf
