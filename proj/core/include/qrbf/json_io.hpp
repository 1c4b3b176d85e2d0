#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrbf/gram.hpp"
#include "qrbf/quaternion.hpp"
#include "qrbf/series.hpp"
#include "qrbf/transforms.hpp"

namespace qrbf {

/// Input document violates its schema; `field` is a JSON-pointer-like path such as /points/3/1.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

using json = nlohmann::json;

double parse_number(const json& j, const std::string& path);
// [re, im] or a plain number.
Complex parse_complex(const json& j, const std::string& path);
// [w, x, y, z] or a plain number.
Quaternion parse_quaternion(const json& j, const std::string& path);
ImaginaryUnit parse_unit(const json& j, const std::string& path);
// A number or an array of numbers.
std::vector<double> parse_real_point(const json& j, const std::string& path);
// A complex literal (d = 1) or an array of them.
std::vector<Complex> parse_complex_point(const json& j, const std::string& path);

json to_json(const Quaternion& q);
json to_json(const Complex& z);

/// {"gamma": γ, "coeffs": [a_0, a_1, …]}: f(q) = Σ qⁿ a_n on the RBF side.
struct SeriesDocument {
  double gamma = 1.0;
  QPowerSeries series;
};
SeriesDocument parse_series_document(const json& j);

/// {"hermite": {"nu": ν, "coeffs": [c_0, …]}}.
HermiteExpansion parse_hermite_document(const json& j);

/// {"hermite": {"nu": ν, "dim": d, "terms": [{"index": [n_1, …], "coeff": c}, …]}}.
HermiteExpansionD parse_hermite_d_document(const json& j);

/// {"kernel": name, "gamma": γ, "alpha"?: α, "degree"?: m, "points": [...]}.
/// Point shapes: real kernels take numbers or arrays of numbers; rbf/fock take [re, im] or arrays of them;
/// qslice takes [w, x, y, z].
struct GramInput {
  KernelId kernel = KernelId::gaussian;
  GramParams params;
  PointSet points;
};
GramInput parse_gram_input(const json& j);

/// {"points": [q, …]} or {"grid": {"x": [lo, hi, n], "y": [lo, hi, n], "unit"?: [0, a, b, c]}} for quaternion
/// grids; {"points": [[z_1, …], …]} for C^d.
std::vector<Quaternion> parse_quaternion_grid(const json& j);
std::vector<std::vector<Complex>> parse_complex_points(const json& j, int dim);

}  // namespace qrbf
