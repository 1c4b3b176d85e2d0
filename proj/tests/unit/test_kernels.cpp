#include <gtest/gtest.h>

#include <cmath>

#include "qrbf/bases.hpp"
#include "qrbf/kernels.hpp"
#include "test_support.hpp"

using namespace qrbf;
using qrbf::test::dist;

TEST(RbfKernel, DiagonalGrowth) {
  // K(z, z) = e^{4y²/γ²}.
  EXPECT_NEAR(rbf_kernel_c(1.0, {0.0, 1.0}, {0.0, 1.0}).real(), std::exp(4.0), 1e-12);
  for (double gamma : {0.5, 1.0, 3.0}) {
    const Complex z{0.37, -0.6};
    const Complex k = rbf_kernel_c(gamma, z, z);
    EXPECT_NEAR(k.real() / std::exp(4.0 * 0.36 / (gamma * gamma)), 1.0, 1e-14);
    EXPECT_NEAR(k.imag(), 0.0, 1e-14);
  }
}

TEST(RbfKernel, RealPointsAreGaussian) {
  const std::vector<double> x{0.3, -1.0}, y{1.0, 0.5};
  const std::vector<Complex> zx{x[0], x[1]}, zy{y[0], y[1]};
  const double expect = std::exp(-(0.49 + 2.25) / 4.0);
  EXPECT_NEAR(gaussian_kernel(2.0, x, y), expect, 1e-16);
  EXPECT_NEAR(rbf_kernel_d(2.0, zx, zy).real(), expect, 1e-16);
}

TEST(RbfKernel, HermitianSymmetry) {
  const Complex z{0.2, 0.7}, w{-0.4, 0.3};
  EXPECT_LT(std::abs(rbf_kernel_c(1.0, z, w) - std::conj(rbf_kernel_c(1.0, w, z))), 1e-15);
}

TEST(FockKernel, Formula) {
  const std::vector<Complex> z{{0.1, 0.2}, {0.3, -0.1}}, w{{-0.5, 0.0}, {0.2, 0.4}};
  const Complex s = z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]);
  EXPECT_LT(std::abs(fock_kernel_d(1.5, z, w) - std::exp(1.5 * s)), 1e-15);
}

TEST(SliceKernel, ReducesToComplexKernelOnOneSlice) {
  const auto unit = ImaginaryUnit::normalized({0.0, 1.0, 1.0, 0.0});
  const Complex z{0.3, 0.5}, w{-0.2, 0.8};
  for (double gamma : {0.8, 1.0, 1.7}) {
    const Quaternion got = rbf_kernel_qslice(gamma, unit.embed(z), unit.embed(w));
    EXPECT_LT(dist(got, unit.embed(rbf_kernel_c(gamma, z, w))), 1e-13) << gamma;
  }
}

TEST(SliceKernel, QuaternionicHermitian) {
  const Quaternion q{0.3, 0.4, 0.0, 0.1}, p{-0.2, 0.0, 0.7, 0.2};
  EXPECT_LT(dist(rbf_kernel_qslice(1.0, q, p), conj(rbf_kernel_qslice(1.0, p, q))), 1e-14);
}

TEST(SliceKernel, CrossSliceByFactors) {
  const double gamma = 1.2, nu = 2.0 / (gamma * gamma);
  const Quaternion q{0.3, 0.6, 0.0, 0.0}, p{0.1, 0.0, -0.4, 0.5};
  const Quaternion expect =
      intrinsic_exp_sq(gamma, q, -1) * test::star_exp_closed_form(nu, q, p) * intrinsic_exp_sq(gamma, conj(p), -1);
  EXPECT_LT(dist(rbf_kernel_qslice(gamma, q, p), expect), 1e-13);
}

TEST(KernelSum, ConvergesWithinTailBound) {
  const Quaternion q{0.4, 0.2, -0.3, 0.0}, p{-0.1, 0.0, 0.5, 0.6};
  const Quaternion exact = rbf_kernel_qslice(1.0, q, p);
  for (int n : {2, 5, 10, 20}) {
    const double err = dist(kernel_sum_truncated(1.0, q, p, n), exact);
    EXPECT_LE(err, kernel_sum_tail_bound(1.0, q, p, n) * (1.0 + 1e-10) + 1e-14) << n;
  }
  EXPECT_LT(dist(kernel_sum_truncated(1.0, q, p, 40), exact), 1e-14);
}

TEST(KernelSum, ComplexFeatureMap) {
  const Complex z{0.5, 0.5}, w{-0.3, 0.9};
  Complex manual{};
  for (int n = 0; n <= 6; ++n) manual += rbf_basis_c(1.0, n, z) * std::conj(rbf_basis_c(1.0, n, w));
  EXPECT_LT(std::abs(kernel_sum_truncated_c(1.0, z, w, 6) - manual), 1e-15);
  EXPECT_LT(std::abs(kernel_sum_truncated_c(1.0, z, w, 50) - rbf_kernel_c(1.0, z, w)), 1e-13);
}

TEST(UtilityKernels, Values) {
  const std::vector<double> x{1.0, 2.0}, y{0.5, -1.0};
  EXPECT_DOUBLE_EQ((UtilityKernel{UtilityKernel::Kind::polynomial, 3}(x, y)), std::pow(1.0 - 1.5, 3));
  EXPECT_DOUBLE_EQ((UtilityKernel{UtilityKernel::Kind::exponential, 0}(x, y)), std::exp(-1.5));
}

TEST(KernelParams, Validation) {
  EXPECT_THROW(KernelParams(0.0), std::invalid_argument);
  EXPECT_THROW(KernelParams(-1.0), std::invalid_argument);
  EXPECT_DOUBLE_EQ(KernelParams(2.0).nu(), 0.5);
}
