#include <gtest/gtest.h>

#include "qrbf/errors.hpp"
#include "qrbf/quaternion.hpp"
#include "test_support.hpp"

using namespace qrbf;
using qrbf::test::dist;

TEST(Quaternion, HamiltonTable) {
  const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, Quaternion{-1.0});
  EXPECT_EQ(i * j * k, Quaternion{-1.0});
}

TEST(Quaternion, ConjugateAndInverse) {
  const Quaternion q{1.0, -2.0, 0.5, 3.0};
  EXPECT_DOUBLE_EQ(norm2(q), 1.0 + 4.0 + 0.25 + 9.0);
  EXPECT_LT(dist(q * conj(q), Quaternion{norm2(q)}), 1e-14);
  EXPECT_LT(dist(q * inverse(q), Quaternion{1.0}), 1e-15);
  EXPECT_LT(dist(inverse(q) * q, Quaternion{1.0}), 1e-15);
  const Quaternion p{0.3, 0.1, -0.7, 2.0};
  EXPECT_LT(dist(conj(q * p), conj(p) * conj(q)), 1e-15);
}

TEST(ImaginaryUnit, Validation) {
  EXPECT_NO_THROW(ImaginaryUnit(Quaternion{0.0, 0.6, 0.8, 0.0}));
  EXPECT_THROW(ImaginaryUnit(Quaternion{0.1, 0.6, 0.8, 0.0}), std::invalid_argument);
  EXPECT_THROW(ImaginaryUnit(Quaternion{0.0, 1.0, 1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(ImaginaryUnit::normalized(Quaternion{2.0}), std::invalid_argument);
  const auto u = ImaginaryUnit::normalized({5.0, 0.0, 3.0, 4.0});
  EXPECT_LT(dist(u.value(), {0.0, 0.0, 0.6, 0.8}), 1e-15);
  EXPECT_LT(dist(u.value() * u.value(), Quaternion{-1.0}), 1e-15);
}

TEST(Slice, DecomposeRoundTrip) {
  const Quaternion q{0.5, 1.0, -2.0, 2.0};
  const SlicePoint s = slice_decompose(q);
  EXPECT_DOUBLE_EQ(s.x, 0.5);
  EXPECT_NEAR(s.y, 3.0, 1e-15);
  EXPECT_FALSE(s.degenerate);
  EXPECT_LT(dist(s.to_quaternion(), q), 1e-15);

  const SlicePoint r = slice_decompose(Quaternion{-1.5});
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.x, -1.5);
  EXPECT_EQ(r.y, 0.0);
}

TEST(Slice, IntrinsicExpSquare) {
  // On the slice of i the function reduces to the complex exponential.
  const Complex z{0.7, -0.4};
  const Complex expect = std::exp(-z * z / 4.0);
  const Quaternion got = intrinsic_exp_sq(2.0, test::from_complex(z), -1);
  EXPECT_LT(dist(got, test::from_complex(expect)), 1e-15);

  // Intrinsic: commutes with any element of its own slice.
  const Quaternion q{0.2, 0.0, 0.6, -0.3};
  const Quaternion e = intrinsic_exp_sq(1.0, q, 1);
  EXPECT_LT(dist(e * q, q * e), 1e-15);
}

TEST(StarExp, SameSliceIsOrdinaryExponential) {
  const auto unit = ImaginaryUnit::normalized({0.0, 1.0, 2.0, -2.0});
  const Complex z{0.4, 0.9}, w{-0.3, 0.5};
  const double nu = 2.0;
  const Quaternion got = star_exp(nu, unit.embed(z), unit.embed(w));
  const Quaternion expect = unit.embed(std::exp(nu * z * std::conj(w)));
  EXPECT_LT(dist(got, expect), 1e-14);
}

TEST(StarExp, CrossSliceMatchesClosedForm) {
  const Quaternion q{0.3, 0.8, 0.0, 0.0};
  const Quaternion p{-0.2, 0.0, 0.5, 0.4};
  for (double nu : {0.5, 2.0, 4.0}) {
    const Quaternion got = star_exp(nu, q, p);
    const Quaternion expect = test::star_exp_closed_form(nu, q, p);
    EXPECT_LT(dist(got, expect), 1e-13 * std::max(1.0, abs(expect))) << "nu=" << nu;
  }
}

TEST(StarExp, OrderingIsNotProductOfArguments) {
  const Quaternion q{0.0, 1.0, 0.0, 0.0};
  const Quaternion p{0.0, 0.0, 1.0, 0.0};
  // q p̄ = −i j = −k, and e^{−k} differs from Σ q^n p̄^n / n!.
  const Quaternion naive = Quaternion{std::cos(1.0)} - Quaternion::unit_k() * std::sin(1.0);
  EXPECT_GT(dist(star_exp(1.0, q, p), naive), 1e-3);
}

TEST(StarExp, TruncationGuard) {
  EXPECT_THROW(star_exp(1.0, Quaternion{400.0}, Quaternion{400.0}), TruncationError);
}
