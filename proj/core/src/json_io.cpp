#include "qrbf/json_io.hpp"

#include <cmath>

namespace qrbf {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* key) { return path + "/" + key; }

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing required field");
  return *it;
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

double positive(const json& j, const std::string& path) {
  const double v = parse_number(j, path);
  if (!(v > 0.0)) throw SchemaError(path, "must be positive");
  return v;
}

int parse_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::vector<Quaternion> parse_coeffs(const json& j, const std::string& path) {
  require_array(j, path);
  if (j.empty()) throw SchemaError(path, "needs at least one coefficient");
  if (j.size() > static_cast<std::size_t>(kMaxSeriesDegree) + 1) throw SchemaError(path, "more than 65 coefficients");
  std::vector<Quaternion> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_quaternion(j[i], at(path, i)));
  return out;
}

}  // namespace

std::vector<double> parse_real_point(const json& j, const std::string& path) {
  if (j.is_number()) return {parse_number(j, path)};
  require_array(j, path);
  if (j.empty()) throw SchemaError(path, "point must have at least one coordinate");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_number(j[i], at(path, i)));
  return out;
}

bool is_complex_literal(const json& j) { return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(); }

std::vector<Complex> parse_complex_point(const json& j, const std::string& path) {
  if (j.is_number() || is_complex_literal(j)) return {parse_complex(j, path)};
  require_array(j, path);
  if (j.empty()) throw SchemaError(path, "point must have at least one coordinate");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], at(path, i)));
  return out;
}

double parse_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "must be finite");
  return v;
}

Complex parse_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {parse_number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected a complex number [re, im]");
  return {parse_number(j[0], at(path, std::size_t{0})), parse_number(j[1], at(path, 1))};
}

Quaternion parse_quaternion(const json& j, const std::string& path) {
  if (j.is_number()) return parse_number(j, path);
  if (!j.is_array() || j.size() != 4) throw SchemaError(path, "expected a quaternion [w, x, y, z]");
  return {parse_number(j[0], at(path, std::size_t{0})), parse_number(j[1], at(path, 1)), parse_number(j[2], at(path, 2)),
          parse_number(j[3], at(path, 3))};
}

ImaginaryUnit parse_unit(const json& j, const std::string& path) {
  const Quaternion q = parse_quaternion(j, path);
  try {
    return ImaginaryUnit(q);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json to_json(const Quaternion& q) { return json::array({q.r, q.i, q.j, q.k}); }
json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

SeriesDocument parse_series_document(const json& j) {
  SeriesDocument d;
  d.gamma = positive(require(j, "gamma", ""), "/gamma");
  d.series = QPowerSeries(parse_coeffs(require(j, "coeffs", ""), "/coeffs"));
  return d;
}

HermiteExpansion parse_hermite_document(const json& j) {
  const auto& h = require(j, "hermite", "");
  HermiteExpansion e;
  e.nu = positive(require(h, "nu", "/hermite"), "/hermite/nu");
  e.coeffs = parse_coeffs(require(h, "coeffs", "/hermite"), "/hermite/coeffs");
  return e;
}

HermiteExpansionD parse_hermite_d_document(const json& j) {
  const auto& h = require(j, "hermite", "");
  HermiteExpansionD e;
  e.nu = positive(require(h, "nu", "/hermite"), "/hermite/nu");
  e.dim = parse_int(require(h, "dim", "/hermite"), "/hermite/dim");
  if (e.dim < 1) throw SchemaError("/hermite/dim", "must be at least 1");
  const auto& terms = require_array(require(h, "terms", "/hermite"), "/hermite/terms");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = at("/hermite/terms", t);
    const auto& idx = require_array(require(terms[t], "index", path), path + "/index");
    if (static_cast<int>(idx.size()) != e.dim) throw SchemaError(path + "/index", "length must equal dim");
    std::vector<int> n;
    for (std::size_t l = 0; l < idx.size(); ++l) {
      const int v = parse_int(idx[l], at(path + "/index", l));
      if (v < 0 || v > kMaxSeriesDegree) throw SchemaError(at(path + "/index", l), "must be in [0, 64]");
      n.push_back(v);
    }
    e.coeffs[MultiIndex(n)] += parse_complex(require(terms[t], "coeff", path), path + "/coeff");
  }
  return e;
}

GramInput parse_gram_input(const json& j) {
  GramInput in;
  const auto& k = require(j, "kernel", "");
  if (!k.is_string()) throw SchemaError("/kernel", "expected a string");
  try {
    in.kernel = parse_kernel_id(k.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/kernel", e.what());
  }
  if (j.contains("gamma")) in.params.gamma = positive(j["gamma"], "/gamma");
  if (j.contains("alpha")) in.params.alpha = positive(j["alpha"], "/alpha");
  if (j.contains("degree")) {
    in.params.degree = parse_int(j["degree"], "/degree");
    if (in.params.degree < 0) throw SchemaError("/degree", "must be non-negative");
  }
  const auto& pts = require_array(require(j, "points", ""), "/points");
  switch (in.kernel) {
    case KernelId::gaussian:
    case KernelId::polynomial:
    case KernelId::exponential: {
      RealPoints out;
      for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(parse_real_point(pts[i], at("/points", i)));
      for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].size() != out[0].size()) throw SchemaError(at("/points", i), "dimension differs from /points/0");
      }
      in.points = std::move(out);
      break;
    }
    case KernelId::rbf:
    case KernelId::fock: {
      ComplexPoints out;
      for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(parse_complex_point(pts[i], at("/points", i)));
      for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].size() != out[0].size()) throw SchemaError(at("/points", i), "dimension differs from /points/0");
      }
      in.points = std::move(out);
      break;
    }
    case KernelId::qslice: {
      QuaternionPoints out;
      for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(parse_quaternion(pts[i], at("/points", i)));
      in.points = std::move(out);
      break;
    }
  }
  return in;
}

std::vector<Quaternion> parse_quaternion_grid(const json& j) {
  if (j.is_object() && j.contains("points")) {
    const auto& pts = require_array(j["points"], "/points");
    std::vector<Quaternion> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(parse_quaternion(pts[i], at("/points", i)));
    return out;
  }
  const auto& g = require(j, "grid", "");
  auto axis = [&](const char* key) {
    const std::string path = at("/grid", key);
    const auto& a = require_array(require(g, key, "/grid"), path);
    if (a.size() != 3) throw SchemaError(path, "expected [lo, hi, n]");
    const double lo = parse_number(a[0], path + "/0");
    const double hi = parse_number(a[1], path + "/1");
    const int n = parse_int(a[2], path + "/2");
    if (n < 1 || n > 10000) throw SchemaError(path + "/2", "must be in [1, 10000]");
    if (hi < lo) throw SchemaError(path, "hi must not be below lo");
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
  };
  const auto xs = axis("x");
  const auto ys = axis("y");
  const ImaginaryUnit unit = g.contains("unit") ? parse_unit(g["unit"], "/grid/unit") : ImaginaryUnit::i();
  std::vector<Quaternion> out;
  for (double x : xs) {
    for (double y : ys) out.push_back(unit.embed({x, y}));
  }
  return out;
}

std::vector<std::vector<Complex>> parse_complex_points(const json& j, int dim) {
  const auto& pts = require_array(require(j, "points", ""), "/points");
  std::vector<std::vector<Complex>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = parse_complex_point(pts[i], at("/points", i));
    if (static_cast<int>(p.size()) != dim) throw SchemaError(at("/points", i), "point dimension differs from --dim");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qrbf
