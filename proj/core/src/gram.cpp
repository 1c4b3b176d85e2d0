#include "qrbf/gram.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qrbf/kernels.hpp"

namespace qrbf {

namespace {

constexpr double kHermitianTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Complex conj_entry(const Complex& z) { return std::conj(z); }
Quaternion conj_entry(const Quaternion& q) { return conj(q); }
double magnitude(const Complex& z) { return std::abs(z); }
double magnitude(const Quaternion& q) { return abs(q); }

template <class T, class K>
std::vector<T> assemble(std::size_t n, K&& k, double& asymmetry) {
  std::vector<T> g(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a * n + b] = k(a, b);
  }
  double defect = 0.0;
  double scale = 1.0;
  for (const auto& v : g) scale = std::max(scale, magnitude(v));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const T upper = g[a * n + b];
      const T lower = conj_entry(g[b * n + a]);
      defect = std::max(defect, magnitude(upper - lower));
      const T avg = (upper + lower) * 0.5;
      g[a * n + b] = avg;
      g[b * n + a] = conj_entry(avg);
    }
  }
  asymmetry = defect / scale;
  return g;
}

template <class P>
const std::vector<P>& expect(const PointSet& points, KernelId kernel) {
  const auto* p = std::get_if<std::vector<P>>(&points);
  if (!p) throw std::invalid_argument("point type does not match kernel '" + std::string(to_string(kernel)) + "'");
  return *p;
}

template <class V>
void check_dims(const std::vector<V>& pts) {
  if (pts.empty()) return;
  const auto d = pts.front().size();
  if (d == 0) throw std::invalid_argument("points must have at least one coordinate");
  for (const auto& p : pts) {
    if (p.size() != d) throw std::invalid_argument("points have inconsistent dimensions");
  }
}

void fnv_mix(std::uint64_t& h, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int byte = 0; byte < 8; ++byte) {
    h ^= bits & 0xffu;
    h *= 0x100000001b3ull;
    bits >>= 8;
  }
}

}  // namespace

std::string_view to_string(KernelId id) {
  switch (id) {
    case KernelId::gaussian: return "gaussian";
    case KernelId::rbf: return "rbf";
    case KernelId::fock: return "fock";
    case KernelId::qslice: return "qslice";
    case KernelId::polynomial: return "polynomial";
    case KernelId::exponential: return "exponential";
  }
  return "unknown";
}

KernelId parse_kernel_id(std::string_view name) {
  for (auto id : {KernelId::gaussian, KernelId::rbf, KernelId::fock, KernelId::qslice, KernelId::polynomial,
                  KernelId::exponential}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

std::uint64_t hash_points(const PointSet& points) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  std::visit(Overloaded{[&](const RealPoints& ps) {
                          for (const auto& p : ps)
                            for (double v : p) fnv_mix(h, v);
                        },
                        [&](const ComplexPoints& ps) {
                          for (const auto& p : ps)
                            for (const auto& v : p) {
                              fnv_mix(h, v.real());
                              fnv_mix(h, v.imag());
                            }
                        },
                        [&](const QuaternionPoints& ps) {
                          for (const auto& q : ps) {
                            fnv_mix(h, q.r);
                            fnv_mix(h, q.i);
                            fnv_mix(h, q.j);
                            fnv_mix(h, q.k);
                          }
                        }},
             points);
  return h;
}

GramMatrix build_gram(KernelId kernel, const GramParams& params, const PointSet& points) {
  if (!(params.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  GramMatrix g;
  g.kernel = kernel;
  g.params = params;
  g.point_hash = hash_points(points);
  const double gamma = params.gamma;

  switch (kernel) {
    case KernelId::gaussian:
    case KernelId::polynomial:
    case KernelId::exponential: {
      const auto& pts = expect<std::vector<double>>(points, kernel);
      check_dims(pts);
      g.n = pts.size();
      const UtilityKernel util{kernel == KernelId::polynomial ? UtilityKernel::Kind::polynomial
                                                              : UtilityKernel::Kind::exponential,
                               params.degree};
      g.entries = assemble<Complex>(g.n, [&](std::size_t a, std::size_t b) -> Complex {
        if (kernel == KernelId::gaussian) return gaussian_kernel(gamma, pts[a], pts[b]);
        return util(pts[a], pts[b]);
      }, g.asymmetry);
      break;
    }
    case KernelId::rbf:
    case KernelId::fock: {
      const auto& pts = expect<std::vector<Complex>>(points, kernel);
      check_dims(pts);
      g.n = pts.size();
      for (const auto& p : pts) {
        for (const auto& v : p) g.nonreal_points = g.nonreal_points || v.imag() != 0.0;
      }
      const double alpha = params.alpha > 0.0 ? params.alpha : 2.0 / (gamma * gamma);
      g.entries = assemble<Complex>(g.n, [&](std::size_t a, std::size_t b) {
        return kernel == KernelId::rbf ? rbf_kernel_d(gamma, pts[a], pts[b]) : fock_kernel_d(alpha, pts[a], pts[b]);
      }, g.asymmetry);
      break;
    }
    case KernelId::qslice: {
      const auto& pts = expect<Quaternion>(points, kernel);
      g.n = pts.size();
      g.entries = assemble<Quaternion>(g.n, [&](std::size_t a, std::size_t b) {
        return rbf_kernel_qslice(gamma, pts[a], pts[b]);
      }, g.asymmetry);
      break;
    }
  }
  return g;
}

Eigen::MatrixXcd quat_matrix_to_complex(std::span<const Quaternion> q, std::size_t n) {
  if (q.size() != n * n) throw std::invalid_argument("quaternion matrix buffer must hold n*n entries");
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd out(2 * m, 2 * m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      const Quaternion& e = q[static_cast<std::size_t>(r * m + c)];
      const Complex a{e.r, e.i};
      const Complex b{e.j, e.k};
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = b;
      out(2 * r + 1, 2 * c) = -std::conj(b);
      out(2 * r + 1, 2 * c + 1) = std::conj(a);
    }
  }
  return out;
}

Eigen::MatrixXcd to_complex_matrix(const GramMatrix& g) {
  if (const auto* q = std::get_if<std::vector<Quaternion>>(&g.entries)) return quat_matrix_to_complex(*q, g.n);
  const auto& c = std::get<std::vector<Complex>>(g.entries);
  const auto m = static_cast<Eigen::Index>(g.n);
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index k = 0; k < m; ++k) out(r, k) = c[static_cast<std::size_t>(r * m + k)];
  }
  return out;
}

PsdReport psd_check(const Eigen::MatrixXcd& g, double tol) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matrix must be square");
  PsdReport r;
  if (g.rows() == 0) {
    r.psd = true;
    r.tolerance = tol;
    return r;
  }
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance * scale) {
    throw std::domain_error("matrix is not Hermitian within tolerance");
  }
  const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  r.min_eigenvalue = ev.minCoeff();
  r.max_eigenvalue = ev.maxCoeff();
  const double spectral = std::max(std::abs(r.min_eigenvalue), std::abs(r.max_eigenvalue));
  r.tolerance = std::max(tol, static_cast<double>(g.rows()) * std::numeric_limits<double>::epsilon() * spectral);
  r.psd = r.min_eigenvalue >= -r.tolerance;
  return r;
}

PsdReport psd_check(const GramMatrix& g, double tol) {
  auto r = psd_check(to_complex_matrix(g), tol);
  if (g.kernel == KernelId::qslice) r.asserted = false;
  if (g.kernel == KernelId::rbf && g.nonreal_points) r.asserted = false;
  return r;
}

}  // namespace qrbf
