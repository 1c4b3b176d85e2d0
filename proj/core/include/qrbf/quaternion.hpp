#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <iosfwd>

namespace qrbf {

using Complex = std::complex<double>;

/// Real quaternion r + i·i + j·j + k·k.
struct Quaternion {
  double r = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : r(real) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double r_, double i_, double j_, double k_) : r(r_), i(i_), j(j_), k(k_) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    r += o.r; i += o.i; j += o.j; k += o.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    r -= o.r; i -= o.i; j -= o.j; k -= o.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r *= s; i *= s; j *= s; k *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.r, -a.i, -a.j, -a.k}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product. Non-commutative.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.r * q.r - p.i * q.i - p.j * q.j - p.k * q.k,
          p.r * q.i + p.i * q.r + p.j * q.k - p.k * q.j,
          p.r * q.j - p.i * q.k + p.j * q.r + p.k * q.i,
          p.r * q.k + p.i * q.j - p.j * q.i + p.k * q.r};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }
constexpr double norm2(const Quaternion& q) { return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k; }
inline double abs(const Quaternion& q) { return std::hypot(std::hypot(q.r, q.i), std::hypot(q.j, q.k)); }
constexpr Quaternion vector_part(const Quaternion& q) { return {0.0, q.i, q.j, q.k}; }
constexpr bool is_real(const Quaternion& q) { return q.i == 0.0 && q.j == 0.0 && q.k == 0.0; }

inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Unit imaginary quaternion I, so that I² = −1. Spans the slice C_I = R + I·R.
class ImaginaryUnit {
 public:
  static constexpr double kTolerance = 1e-12;

  ImaginaryUnit() : value_(Quaternion::unit_i()) {}
  // Throws std::invalid_argument unless Re(q) = 0 and |q| = 1 within kTolerance.
  explicit ImaginaryUnit(const Quaternion& q);

  // Normalizes the vector part of v. Throws std::invalid_argument when v is real.
  static ImaginaryUnit normalized(const Quaternion& v);

  static ImaginaryUnit i() { return ImaginaryUnit(); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::unit_j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::unit_k()); }

  const Quaternion& value() const { return value_; }

  // Embeds a + b·i ∈ C as a + b·I ∈ C_I.
  Quaternion embed(const Complex& z) const {
    return {z.real(), z.imag() * value_.i, z.imag() * value_.j, z.imag() * value_.k};
  }

  bool operator==(const ImaginaryUnit&) const = default;

 private:
  Quaternion value_;
};

/// q = x + I·y on the slice C_I. `degenerate` marks real points, which lie on every slice.
struct SlicePoint {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit;
  bool degenerate = false;

  Quaternion to_quaternion() const { return unit.embed({x, y}); }
  Complex to_complex() const { return {x, y}; }
};

/// Decomposes q into (x, y, I) with y > 0. For real q returns (q, 0, i) with degenerate = true.
SlicePoint slice_decompose(const Quaternion& q);

/// Evaluates a slice function given by its complex restriction f: C → C at q.
/// Exact for intrinsic functions (real on the real axis); for real q the default slice i is used.
template <class F>
Quaternion apply_on_slice(const Quaternion& q, F&& f) {
  const SlicePoint s = slice_decompose(q);
  return s.unit.embed(f(s.to_complex()));
}

/// e^{sign·q²/γ²}, an intrinsic function: it commutes with every quaternion on the slice of q.
Quaternion intrinsic_exp_sq(double gamma, const Quaternion& q, int sign);

/// Default relative stopping tolerance for truncated exponential series.
inline constexpr double kSeriesTolerance = 1e-17;
inline constexpr int kStarExpMaxTerms = 512;

/// Slice-regular star exponential e_*^ν(q p̄) = Σ ν^n q^n p̄^n / n!.
/// Ordering is q^n·p̄^n, not (q p̄)^n. Throws TruncationError after kStarExpMaxTerms terms.
Quaternion star_exp(double nu, const Quaternion& q, const Quaternion& p, double tol = kSeriesTolerance);

}  // namespace qrbf
