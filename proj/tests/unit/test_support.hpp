#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "qrbf/quaternion.hpp"

namespace qrbf::test {

inline double dist(const Quaternion& a, const Quaternion& b) { return abs(a - b); }

inline Quaternion from_complex(const Complex& z) { return {z.real(), z.imag(), 0.0, 0.0}; }

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

inline ImaginaryUnit random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return ImaginaryUnit::normalized({0.0, n(rng), n(rng), n(rng)});
}

// Σ ν^n q^n p̄^n / n! in closed form. With q = x + I y, p = u + J v, z = x + iy, w = u + iv,
// P = e^{ν z w̄} and R = e^{ν z w}:
// ½Re(P+R) + I·½Im(P+R) + J·½(Im P − Im R) + IJ·½Re(R − P).
inline Quaternion star_exp_closed_form(double nu, const Quaternion& q, const Quaternion& p) {
  const SlicePoint sq = slice_decompose(q);
  const SlicePoint sp = slice_decompose(p);
  const Complex z{sq.x, sq.y};
  const Complex w{sp.x, sp.y};
  const Complex pp = std::exp(nu * z * std::conj(w));
  const Complex rr = std::exp(nu * z * w);
  const Quaternion i = sq.unit.value();
  const Quaternion j = sp.unit.value();
  return Quaternion{0.5 * (pp + rr).real()} + i * (0.5 * (pp + rr).imag()) + j * (0.5 * (pp.imag() - rr.imag())) +
         (i * j) * (0.5 * (rr - pp).real());
}

}  // namespace qrbf::test
