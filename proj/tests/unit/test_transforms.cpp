#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qrbf/bases.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/kernels.hpp"
#include "qrbf/spaces.hpp"
#include "qrbf/transforms.hpp"
#include "test_support.hpp"

using namespace qrbf;
using qrbf::test::dist;

namespace {

// Trapezoid rule on [−L, L]; spectrally accurate for Gaussian-decaying integrands.
template <class F>
Complex trapezoid(F&& f, double half_width = 14.0, int n = 4000) {
  const double h = 2.0 * half_width / n;
  Complex s{};
  for (int a = 0; a <= n; ++a) {
    const double x = -half_width + a * h;
    s += (a == 0 || a == n ? 0.5 : 1.0) * f(x);
  }
  return s * h;
}

// Unitary kernel on the complex plane, written out directly.
Complex sb_kernel_c(double nu, Complex z, double x) {
  return std::pow(nu / std::numbers::pi, 0.25) * std::exp(-nu / 2.0 * (z * z + x * x) + nu * std::sqrt(2.0) * z * x);
}

}  // namespace

TEST(SbKernel, MatchesGeneratingSeries) {
  const Quaternion q{0.3, 0.0, 0.4, 0.2};
  for (double nu : {0.5, 2.0}) {
    for (double x : {-1.0, 0.3, 1.7}) {
      const Quaternion k = sb_kernel(nu, q, x);
      EXPECT_LT(dist(k, sb_kernel_series(nu, q, x, 60)), 1e-13 * std::max(1.0, abs(k))) << nu << " " << x;
    }
  }
}

TEST(SbKernel, ComplexFormulaAndNormalizations) {
  const Complex z{0.4, -0.7};
  const double nu = 1.3, x = 0.6;
  EXPECT_LT(dist(sb_kernel(nu, test::from_complex(z), x), test::from_complex(sb_kernel_c(nu, z, x))), 1e-14);
  const Quaternion lit = sb_kernel(nu, test::from_complex(z), x, Normalization::paper_literal);
  EXPECT_LT(dist(lit, sb_kernel(nu, test::from_complex(z), x) * std::sqrt(nu / std::numbers::pi)), 1e-14);
}

TEST(RbfSbKernel, IsGaussianTimesFockKernel) {
  const double gamma = 1.4, nu = 2.0 / (gamma * gamma);
  const Quaternion q{-0.2, 0.5, 0.0, 0.3};
  const double x = 0.8;
  EXPECT_LT(dist(rbf_sb_kernel(gamma, q, x), intrinsic_exp_sq(gamma, q, -1) * sb_kernel(nu, q, x)), 1e-14);
  EXPECT_LT(dist(rbf_sb_kernel(gamma, q, x), rbf_sb_kernel_series(gamma, q, x, 60)), 1e-13);
}

TEST(SbTransform, GaussianMapsToConstant) {
  // ψ_0 ↦ 1 and ψ_1 ↦ √ν q.
  const double nu = 2.0;
  const HermiteExpansion psi0{nu, {1.0}}, psi1{nu, {0.0, 1.0}};
  const Quaternion q{0.3, 0.1, -0.5, 0.2};
  EXPECT_LT(dist(sb_transform(nu, psi0, q), Quaternion{1.0}), 1e-15);
  EXPECT_LT(dist(sb_transform(nu, psi1, q), q * std::sqrt(nu)), 1e-15);
}

TEST(SbTransform, QuadratureMatchesTrapezoidOracle) {
  const double nu = 1.5, rate = 0.7;
  const L2Handle phi{[=](double x) { return Quaternion{(1.0 + x - 0.5 * x * x) * std::exp(-rate * x * x / 2.0)}; },
                     L2Certificate{rate, 2}};
  for (Complex z : {Complex{0.0, 0.0}, Complex{0.5, 0.3}, Complex{-1.0, 1.2}}) {
    const Complex expect = trapezoid([&](double x) { return sb_kernel_c(nu, z, x) * phi.fn(x).r; });
    const Quaternion got = sb_transform(nu, phi, test::from_complex(z));
    EXPECT_LT(dist(got, test::from_complex(expect)), 1e-12 * std::max(1.0, std::abs(expect))) << z;
  }
}

TEST(SbTransform, ExactAndQuadraturePathsAgree) {
  const double nu = 2.0;
  const HermiteExpansion h{nu, {Quaternion{0.5}, Quaternion{0.0, 0.0, 1.0, 0.0}, Quaternion{0.0, 0.2, 0.0, 0.0}}};
  const L2Handle handle{[h](double x) { return h(x); }, L2Certificate{nu, 2}};
  const Quaternion q{0.2, 0.0, 0.3, -0.6};
  EXPECT_LT(dist(sb_transform(nu, h, q), sb_transform(nu, handle, q)), 1e-13);
  EXPECT_LT(dist(rbf_sb_transform(1.0, h, q), intrinsic_exp_sq(1.0, q, -1) * sb_transform(nu, h, q)), 1e-15);
}

TEST(SbTransform, ImageOfHermiteFunctionsIsRbfBasis) {
  const double gamma = 0.9, nu = 2.0 / (gamma * gamma);
  const Quaternion q{0.1, 0.4, 0.4, 0.0};
  for (int n = 0; n <= 8; ++n) {
    std::vector<Quaternion> c(static_cast<std::size_t>(n + 1));
    c.back() = 1.0;
    const HermiteExpansion psi{nu, c};
    EXPECT_LT(dist(rbf_sb_transform(gamma, psi, q), rbf_basis_q(gamma, n, q)), 1e-14) << n;
  }
}

TEST(SbTransform, Unitary) {
  const double gamma = 1.0, nu = 2.0;
  const HermiteExpansion h{nu, {Quaternion{0.3}, Quaternion{0.0, 1.0, 0.0, 0.0}, Quaternion{0.0, 0.0, 0.0, 0.5}}};
  const RbfSlice space{KernelParams(gamma), ImaginaryUnit::j()};
  EXPECT_NEAR(h.l2_norm(), std::sqrt(0.09 + 1.0 + 0.25), 1e-15);
  EXPECT_NEAR(norm(space, rbf_sb_image(gamma, h)), h.l2_norm(), 1e-10);

  // Sampled function at the transform's own rate: certified image, norm from an independent L² oracle.
  const L2Handle phi{[=](double x) { return Quaternion{x, 0.0, 1.0 - x * x, 0.0} * std::exp(-nu * x * x / 2.0); },
                     L2Certificate{nu, 2}};
  const double l2 = std::sqrt(std::real(trapezoid([&](double x) { return Complex{norm2(phi.fn(x))}; })));
  ASSERT_TRUE(sb_image_certificate(nu, phi).has_value());
  EXPECT_NEAR(norm(space, rbf_sb_transform_handle(gamma, phi)), l2, 1e-10);

  // A different rate leaves the image without a Fock certificate.
  const L2Handle other{[](double x) { return Quaternion{std::exp(-0.6 * x * x)}; }, L2Certificate{1.2, 0}};
  EXPECT_FALSE(sb_image_certificate(nu, other).has_value());
  EXPECT_THROW(norm(space, rbf_sb_transform_handle(gamma, other)), WeightIncompatibleError);
}

TEST(SbTransform, LiteralPrefactorOffset) {
  const double nu = 2.0;
  const HermiteExpansion h{nu, {Quaternion{1.0}, Quaternion{0.5}}};
  const Quaternion q{0.3, 0.2, 0.0, 0.0};
  const Quaternion u = sb_transform(nu, h, q);
  EXPECT_LT(dist(sb_transform(nu, h, q, Normalization::paper_literal), u * std::sqrt(nu / std::numbers::pi)), 1e-15);
}

TEST(SbTransform, Errors) {
  const L2Handle bare{[](double x) { return Quaternion{std::exp(-x * x)}; }, std::nullopt};
  EXPECT_THROW(sb_transform(1.0, bare, Quaternion{0.0}), WeightIncompatibleError);
  const L2Handle flat{[](double) { return Quaternion{1.0}; }, L2Certificate{0.0, 0}};
  EXPECT_THROW(sb_transform(1.0, flat, Quaternion{0.0}), WeightIncompatibleError);
  EXPECT_THROW(sb_image(1.0, HermiteExpansion{2.0, {1.0}}), std::invalid_argument);
}

TEST(SbTransform, BatchMatchesSingle) {
  const double nu = 1.0;
  std::vector<L2Function> phis{HermiteExpansion{nu, {0.0, 1.0}},
                               L2Handle{[](double x) { return Quaternion{std::exp(-x * x)}; }, L2Certificate{2.0, 0}}};
  const std::vector<Quaternion> pts{{0.0}, {0.5, 0.5, 0.0, 0.0}, {-0.3, 0.0, 0.0, 1.0}};
  const auto batch = sb_transform_batch(nu, phis, pts);
  for (std::size_t f = 0; f < phis.size(); ++f)
    for (std::size_t p = 0; p < pts.size(); ++p)
      EXPECT_LT(dist(batch[f][p], sb_transform(nu, phis[f], pts[p])), 1e-14);
}

TEST(SbTransformD, ExactAndQuadrature) {
  const double nu = 2.0;
  HermiteExpansionD h{nu, 2, {}};
  h.coeffs[{1, 0}] = {0.0, 1.0};
  h.coeffs[{0, 2}] = 0.5;
  const L2HandleD handle{2, [h](std::span<const double> x) { return h(x); }, L2Certificate{nu, 2}};
  const std::vector<Complex> z{{0.3, 0.1}, {-0.2, 0.4}};
  const Complex exact = sb_transform_d(nu, h, z);
  EXPECT_LT(std::abs(exact - sb_transform_d(nu, handle, z)), 1e-12);
  // Exact image: ψ_{(1,0)} ↦ √ν z_1, ψ_{(0,2)} ↦ ν z_2² / √2.
  const Complex expect = Complex{0.0, 1.0} * std::sqrt(nu) * z[0] + 0.5 * nu * z[1] * z[1] / std::sqrt(2.0);
  EXPECT_LT(std::abs(exact - expect), 1e-15);
  const Complex z2 = z[0] * z[0] + z[1] * z[1];
  EXPECT_LT(std::abs(rbf_sb_transform_d(1.0, h, z) - std::exp(-z2) * exact), 1e-15);
  EXPECT_NEAR(h.l2_norm(), std::sqrt(1.25), 1e-15);
}

TEST(SbKernelD, ProductOfOneDimensionalKernels) {
  const std::vector<Complex> z{{0.3, 0.1}, {-0.2, 0.4}};
  const std::vector<double> x{0.5, -1.0};
  EXPECT_LT(std::abs(sb_kernel_d(1.5, z, x) - sb_kernel_c(1.5, z[0], x[0]) * sb_kernel_c(1.5, z[1], x[1])), 1e-15);
  const Complex z2 = z[0] * z[0] + z[1] * z[1];
  EXPECT_LT(std::abs(rbf_sb_kernel_d(1.0, z, x) - std::exp(-z2) * sb_kernel_d(2.0, z, x)), 1e-15);
}
