#include "qrbf/quaternion.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "qrbf/errors.hpp"

namespace qrbf {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.r << ", " << q.i << ", " << q.j << ", " << q.k << ')';
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& q) : value_(q) {
  if (std::abs(q.r) > kTolerance || std::abs(abs(q) - 1.0) > kTolerance) {
    throw std::invalid_argument("not a unit imaginary quaternion: real part must be 0 and modulus 1");
  }
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion& v) {
  const Quaternion im = vector_part(v);
  const double len = abs(im);
  if (len == 0.0) {
    throw std::invalid_argument("cannot normalize a real quaternion to an imaginary unit");
  }
  ImaginaryUnit u;
  u.value_ = im / len;
  return u;
}

SlicePoint slice_decompose(const Quaternion& q) {
  SlicePoint s;
  s.x = q.r;
  if (is_real(q)) {
    s.degenerate = true;
    return s;
  }
  s.unit = ImaginaryUnit::normalized(q);
  s.y = abs(vector_part(q));
  return s;
}

Quaternion intrinsic_exp_sq(double gamma, const Quaternion& q, int sign) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const double scale = static_cast<double>(sign) / (gamma * gamma);
  return apply_on_slice(q, [scale](const Complex& z) { return std::exp(scale * (z * z)); });
}

Quaternion star_exp(double nu, const Quaternion& q, const Quaternion& p, double tol) {
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const Quaternion pbar = conj(p);
  const double ratio = nu * abs(q) * abs(p);

  Quaternion q_pow = 1.0;
  Quaternion p_pow = 1.0;
  Quaternion sum = 1.0;
  double coeff = 1.0;  // ν^n / n!
  double bound = 1.0;  // ν^n |q|^n |p|^n / n!, majorizes the n-th term
  for (int n = 1; n < kStarExpMaxTerms; ++n) {
    q_pow = q_pow * q;
    p_pow = p_pow * pbar;
    coeff *= nu / n;
    bound *= ratio / n;
    sum += coeff * (q_pow * p_pow);
    // Once n > 2ν|q||p| the bounds at least halve each step, so the tail is below the last bound.
    if (n > 2.0 * ratio && bound <= tol * abs(sum)) return sum;
  }
  throw TruncationError("star_exp did not converge within " + std::to_string(kStarExpMaxTerms) +
                        " terms (nu*|q|*|p| = " + std::to_string(ratio) + ")");
}

}  // namespace qrbf
