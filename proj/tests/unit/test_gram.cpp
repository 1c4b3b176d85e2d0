#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qrbf/bases.hpp"
#include "qrbf/gram.hpp"
#include "qrbf/kernels.hpp"
#include "test_support.hpp"

using namespace qrbf;

namespace {

const std::vector<Complex>& complex_entries(const GramMatrix& g) { return std::get<std::vector<Complex>>(g.entries); }

}  // namespace

TEST(BuildGram, SinglePoint) {
  const auto g = build_gram(KernelId::gaussian, {1.0}, RealPoints{{0.3}});
  ASSERT_EQ(g.n, 1u);
  EXPECT_EQ(complex_entries(g)[0], Complex{1.0});
}

TEST(BuildGram, IdenticalComplexPoints) {
  const double gamma = 1.5, y = 0.8;
  const auto g = build_gram(KernelId::rbf, {gamma}, ComplexPoints{{{0.2, y}}, {{0.2, y}}});
  for (const Complex& c : complex_entries(g)) EXPECT_NEAR(std::abs(c - std::exp(4.0 * y * y / (gamma * gamma))), 0.0, 1e-13);
  EXPECT_TRUE(g.nonreal_points);
  EXPECT_FALSE(psd_check(g, 1e-10).asserted);
}

TEST(BuildGram, EightRealPointsMatchDirectFormula) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  RealPoints pts;
  for (int a = 0; a < 8; ++a) pts.push_back({u(rng)});
  const auto g = build_gram(KernelId::gaussian, {1.0}, pts);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const double d = pts[a][0] - pts[b][0];
      EXPECT_NEAR(complex_entries(g)[a * 8 + b].real(), std::exp(-d * d), 1e-15);
    }
  EXPECT_TRUE(psd_check(g, 1e-10).psd);
  EXPECT_EQ(g.point_hash, hash_points(pts));
}

TEST(BuildGram, RandomPointsInR3ArePsd) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealPoints pts;
  for (int a = 0; a < 16; ++a) pts.push_back({u(rng), u(rng), u(rng)});
  const auto rep = psd_check(build_gram(KernelId::gaussian, {0.8}, pts), 1e-10);
  EXPECT_TRUE(rep.asserted);
  EXPECT_GE(rep.min_eigenvalue, -1e-10);
}

TEST(BuildGram, DomainMismatch) {
  EXPECT_THROW(build_gram(KernelId::qslice, {1.0}, RealPoints{{1.0}}), std::invalid_argument);
  EXPECT_THROW(build_gram(KernelId::gaussian, {1.0}, RealPoints{{1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST(PsdCheck, IdentityAndIndefinite) {
  const auto id = psd_check(Eigen::MatrixXcd::Identity(4, 4), 1e-12);
  EXPECT_NEAR(id.min_eigenvalue, 1.0, 1e-15);
  EXPECT_TRUE(id.psd);

  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 2.0, 2.0, 1.0;
  const auto rep = psd_check(m, 1e-12);
  EXPECT_NEAR(rep.min_eigenvalue, -1.0, 1e-14);
  EXPECT_FALSE(rep.psd);

  m(0, 1) = 3.0;
  EXPECT_THROW(psd_check(m, 1e-12), std::domain_error);
}

TEST(PsdCheck, FeatureMapGram) {
  // Truncated kernel sum equals V V^H with V[a][n] = e_n(z_a).
  const std::vector<Complex> z{{0.1, 0.3}, {-0.5, 0.2}, {0.7, -0.4}, {0.0, 0.9}, {1.1, 0.0}};
  const int n_max = 2;
  Eigen::MatrixXcd v(5, n_max + 1), k(5, 5);
  for (int a = 0; a < 5; ++a) {
    for (int n = 0; n <= n_max; ++n) v(a, n) = rbf_basis_c(1.0, n, z[a]);
    for (int b = 0; b < 5; ++b) k(a, b) = kernel_sum_truncated_c(1.0, z[a], z[b], n_max);
  }
  EXPECT_LT((k - v * v.adjoint()).norm(), 1e-10);
  const auto rep = psd_check(k, 1e-10);
  EXPECT_TRUE(rep.psd);
  EXPECT_NEAR(rep.min_eigenvalue, 0.0, 1e-10);  // rank 3 < 5
}

TEST(Chi, ScalarsAndHomomorphism) {
  const Quaternion one{1.0};
  const auto c1 = quat_matrix_to_complex(std::span(&one, 1), 1);
  EXPECT_TRUE(c1.isApprox(Eigen::MatrixXcd::Identity(2, 2)));

  const Quaternion j = Quaternion::unit_j();
  Eigen::MatrixXcd cj_expect(2, 2);
  cj_expect << 0.0, 1.0, -1.0, 0.0;
  EXPECT_EQ(quat_matrix_to_complex(std::span(&j, 1), 1), cj_expect);

  std::mt19937_64 rng(11);
  std::vector<Quaternion> p(4), q(4), pq(4);
  for (auto& x : p) x = test::random_quaternion(rng);
  for (auto& x : q) x = test::random_quaternion(rng);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) pq[a * 2 + b] += p[a * 2 + c] * q[c * 2 + b];
  const Eigen::MatrixXcd lhs = quat_matrix_to_complex(pq, 2);
  const Eigen::MatrixXcd rhs = quat_matrix_to_complex(p, 2) * quat_matrix_to_complex(q, 2);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Chi, PreservesHermitian) {
  std::vector<Quaternion> h{{2.0}, {0.1, 0.2, 0.3, 0.4}, conj(Quaternion{0.1, 0.2, 0.3, 0.4}), {1.0}};
  const auto c = quat_matrix_to_complex(h, 2);
  EXPECT_LT((c - c.adjoint()).norm(), 1e-16);
  h[1] = {0.1, 0.2, 0.3, 0.5};
  const auto d = quat_matrix_to_complex(h, 2);
  EXPECT_GT((d - d.adjoint()).norm(), 1e-3);
}

TEST(QsliceGram, ReportedNotAsserted) {
  const QuaternionPoints pts{{0.1, 0.2, 0.0, 0.0}, {0.0, 0.0, 0.5, 0.1}, {-0.3, 0.0, 0.0, 0.4}};
  const auto g = build_gram(KernelId::qslice, {1.0}, pts);
  ASSERT_TRUE(g.quaternionic());
  const auto rep = psd_check(g, 1e-10);
  EXPECT_FALSE(rep.asserted);
  EXPECT_EQ(to_complex_matrix(g).rows(), 6);
}

TEST(KernelIds, RoundTrip) {
  for (auto id : {KernelId::gaussian, KernelId::rbf, KernelId::fock, KernelId::qslice, KernelId::polynomial,
                  KernelId::exponential})
    EXPECT_EQ(parse_kernel_id(to_string(id)), id);
  EXPECT_THROW(parse_kernel_id("laplace"), std::invalid_argument);
}
