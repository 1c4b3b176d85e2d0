#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "csv.hpp"
#include "qrbf/bases.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/gram.hpp"
#include "qrbf/json_io.hpp"
#include "qrbf/kernels.hpp"
#include "qrbf/transforms.hpp"
#include "qrbf/verification.hpp"

namespace qrbf::cli {

namespace {

struct Options {
  double gamma = 1.0;
  int dim = 1;
  int quad_order = 80;
  std::string normalization = "unitary";
  std::vector<std::string> tol;
  std::uint64_t seed = 20240611;
  std::string input;
  std::string output;
  std::string report;

  std::string kernel = "rbf";
  std::string z;
  std::string w;
  std::optional<double> alpha;
  int degree = 2;

  std::string grid;
  std::string kind = "rbf-sb";
  std::optional<double> nu;

  std::string family = "rbf";
  int n_max = 5;

  double fock_nu() const { return nu.value_or(2.0 / (gamma * gamma)); }
  Normalization norm() const {
    return normalization == "paper" ? Normalization::paper_literal : Normalization::unitary;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw SchemaError(path + ":line " + std::to_string(line), "malformed JSON");
  }
}

json read_json(const std::string& path) { return parse_json_text(read_file(path), path); }

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw SchemaError(o.output, "cannot write output file");
  f << text;
}

void write_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError(path, "cannot write report file");
  f << report.dump(2) << '\n';
}

// "a,b;c,d" → [[a,b],[c,d]]; "a,b" → [a,b]; "a" → a.
json point_from_flag(const std::string& s, const std::string& flag) {
  auto numbers = [&](const std::string& group) {
    json arr = json::array();
    std::stringstream ss(group);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        arr.push_back(v);
      } catch (const std::exception&) {
        throw SchemaError(flag, "not a number: '" + cell + "'");
      }
    }
    if (arr.empty()) throw SchemaError(flag, "empty point");
    return arr.size() == 1 ? arr[0] : arr;
  };
  if (s.find(';') == std::string::npos) return numbers(s);
  json out = json::array();
  std::stringstream ss(s);
  std::string group;
  while (std::getline(ss, group, ';')) out.push_back(numbers(group));
  return out;
}

// ---- kernel ----------------------------------------------------------------------------------------

enum class ValueKind { real, complex, quaternion };

struct KernelEval {
  ValueKind kind;
  std::function<Quaternion(const json&, const json&, const std::string&)> fn;
};

KernelEval make_kernel(const Options& o) {
  const double gamma = o.gamma;
  const Normalization normalization = o.norm();
  const std::string& k = o.kernel;
  auto same_dim = [](std::size_t a, std::size_t b, const std::string& path) {
    if (a != b) throw SchemaError(path, "z and w have different dimensions");
  };
  if (k == "rbf" || k == "fock") {
    const double alpha = o.alpha.value_or(2.0 / (gamma * gamma));
    return {ValueKind::complex, [=](const json& zj, const json& wj, const std::string& path) {
              const auto z = parse_complex_point(zj, path + "/z");
              const auto w = parse_complex_point(wj, path + "/w");
              same_dim(z.size(), w.size(), path);
              const Complex v = k == "rbf" ? rbf_kernel_d(gamma, z, w) : fock_kernel_d(alpha, z, w);
              return Quaternion{v.real(), v.imag(), 0.0, 0.0};
            }};
  }
  if (k == "qslice") {
    return {ValueKind::quaternion, [=](const json& zj, const json& wj, const std::string& path) {
              return rbf_kernel_qslice(gamma, parse_quaternion(zj, path + "/z"), parse_quaternion(wj, path + "/w"));
            }};
  }
  if (k == "sb" || k == "rbf-sb") {
    const double nu = o.fock_nu();
    return {ValueKind::quaternion, [=](const json& zj, const json& wj, const std::string& path) {
              const Quaternion q = parse_quaternion(zj, path + "/z");
              const double x = parse_number(wj, path + "/w");
              return k == "sb" ? sb_kernel(nu, q, x, normalization) : rbf_sb_kernel(gamma, q, x, normalization);
            }};
  }
  if (k == "gaussian" || k == "polynomial" || k == "exponential") {
    const UtilityKernel util{k == "polynomial" ? UtilityKernel::Kind::polynomial : UtilityKernel::Kind::exponential,
                             o.degree};
    return {ValueKind::real, [=](const json& zj, const json& wj, const std::string& path) {
              const auto x = parse_real_point(zj, path + "/z");
              const auto y = parse_real_point(wj, path + "/w");
              same_dim(x.size(), y.size(), path);
              return Quaternion{k == "gaussian" ? gaussian_kernel(gamma, x, y) : util(x, y)};
            }};
  }
  throw SchemaError("--kernel", "unknown kernel '" + k + "'");
}

int cmd_kernel(Options o, std::ostream& out) {
  std::vector<std::pair<json, json>> pairs;
  if (!o.input.empty()) {
    const json doc = read_json(o.input);
    if (!doc.is_object()) throw SchemaError("/", "expected an object");
    if (doc.contains("kernel")) {
      if (!doc["kernel"].is_string()) throw SchemaError("/kernel", "expected a string");
      o.kernel = doc["kernel"].get<std::string>();
    }
    if (doc.contains("gamma")) {
      o.gamma = parse_number(doc["gamma"], "/gamma");
      if (!(o.gamma > 0.0)) throw SchemaError("/gamma", "must be positive");
    }
    if (!doc.contains("pairs") || !doc["pairs"].is_array()) throw SchemaError("/pairs", "expected an array of [z, w]");
    for (std::size_t i = 0; i < doc["pairs"].size(); ++i) {
      const auto& p = doc["pairs"][i];
      if (!p.is_array() || p.size() != 2) throw SchemaError("/pairs/" + std::to_string(i), "expected [z, w]");
      pairs.emplace_back(p[0], p[1]);
    }
  } else {
    if (o.z.empty() || o.w.empty()) throw SchemaError("--z/--w", "give both points or an --input file");
    pairs.emplace_back(point_from_flag(o.z, "--z"), point_from_flag(o.w, "--w"));
  }
  const auto eval = make_kernel(o);
  std::ostringstream text;
  CsvWriter csv(text);
  std::vector<std::string> cols;
  if (eval.kind == ValueKind::real) cols.push_back("value");
  if (eval.kind == ValueKind::complex) push_complex_columns(cols, "value");
  if (eval.kind == ValueKind::quaternion) push_quaternion_columns(cols, "value");
  csv.header(cols);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Quaternion v = eval.fn(pairs[i].first, pairs[i].second, o.input.empty() ? "" : "/pairs/" + std::to_string(i));
    if (eval.kind == ValueKind::real) csv.cell(v.r);
    if (eval.kind == ValueKind::complex) csv.cell(Complex{v.r, v.i});
    if (eval.kind == ValueKind::quaternion) csv.cell(v);
    csv.end_row();
  }
  emit(o, text.str(), out);
  return kExitOk;
}

// ---- gram ------------------------------------------------------------------------------------------

std::pair<std::string, double> split_tolerance(const std::string& t) {
  const auto eq = t.find('=');
  if (eq == std::string::npos) throw SchemaError("--tol", "expected name=value, got '" + t + "'");
  try {
    std::size_t used = 0;
    const double v = std::stod(t.substr(eq + 1), &used);
    if (used != t.size() - eq - 1 || !(v >= 0.0)) throw std::invalid_argument(t);
    return {t.substr(0, eq), v};
  } catch (const std::exception&) {
    throw SchemaError("--tol", "not a non-negative number in '" + t + "'");
  }
}

double tolerance_override(const Options& o, const std::string& name, double fallback) {
  for (const auto& t : o.tol) {
    const auto [key, v] = split_tolerance(t);
    if (key == name) return v;
  }
  return fallback;
}

int cmd_gram(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw SchemaError("--input", "gram needs an input JSON file");
  json doc = read_json(o.input);
  if (doc.is_object() && !doc.contains("gamma")) doc["gamma"] = o.gamma;
  const auto in = parse_gram_input(doc);
  const auto g = build_gram(in.kernel, in.params, in.points);
  const auto rep = psd_check(g, tolerance_override(o, "psd", 1e-10));

  std::ostringstream text;
  CsvWriter csv(text);
  std::vector<std::string> cols;
  const bool real_kernel = in.kernel == KernelId::gaussian || in.kernel == KernelId::polynomial ||
                           in.kernel == KernelId::exponential;
  for (std::size_t b = 0; b < g.n; ++b) {
    const std::string name = "c" + std::to_string(b);
    if (g.quaternionic()) {
      push_quaternion_columns(cols, name);
    } else if (real_kernel) {
      cols.push_back(name);
    } else {
      push_complex_columns(cols, name);
    }
  }
  csv.header(cols);
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = 0; b < g.n; ++b) {
      if (const auto* q = std::get_if<std::vector<Quaternion>>(&g.entries)) {
        csv.cell((*q)[a * g.n + b]);
      } else {
        const Complex c = std::get<std::vector<Complex>>(g.entries)[a * g.n + b];
        if (real_kernel) {
          csv.cell(c.real());
        } else {
          csv.cell(c);
        }
      }
    }
    csv.end_row();
  }
  json report = {{"kernel", std::string(to_string(g.kernel))},
                 {"n", g.n},
                 {"point_hash", g.point_hash},
                 {"asymmetry", g.asymmetry},
                 {"min_eig", rep.min_eigenvalue},
                 {"max_eig", rep.max_eigenvalue},
                 {"tol", rep.tolerance},
                 {"psd", rep.psd},
                 {"asserted", rep.asserted}};
  emit(o, text.str(), out);
  write_report(o.report, report);
  return rep.asserted && !rep.psd ? kExitCheckFailed : kExitOk;
}

// ---- transform -------------------------------------------------------------------------------------

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Least-squares fit of certified samples onto ψ_0..ψ_p at the certificate's rate.
HermiteExpansion fit_samples(const SampleTable& t, const std::string& path) {
  if (!t.has_certificate) {
    throw SchemaError(path, "sampled input needs a '# decay rate=<r> degree=<p>' certificate line");
  }
  if (t.degree > kMaxBasisIndex) throw SchemaError(path, "certificate degree above 64");
  const auto rows = static_cast<Eigen::Index>(t.x.size());
  const auto cols = static_cast<Eigen::Index>(t.degree + 1);
  if (rows < cols) throw SchemaError(path, "fewer samples than certificate degree + 1");
  Eigen::MatrixXd a(rows, cols);
  Eigen::MatrixXd b(rows, 4);
  for (Eigen::Index s = 0; s < rows; ++s) {
    const auto psi = hermite_psi_all(t.rate, t.degree, t.x[static_cast<std::size_t>(s)]);
    for (Eigen::Index n = 0; n < cols; ++n) a(s, n) = psi[static_cast<std::size_t>(n)];
    const Quaternion& v = t.values[static_cast<std::size_t>(s)];
    b.row(s) << v.r, v.i, v.j, v.k;
  }
  const Eigen::MatrixXd c = a.colPivHouseholderQr().solve(b);
  const double residual = (a * c - b).norm();
  if (residual > 1e-8 * std::max(1e-300, b.norm())) {
    throw SchemaError(path, "samples are not of the certified form p(x) e^{-rate x^2/2}; residual " +
                                format_number(residual / b.norm()));
  }
  HermiteExpansion e{t.rate, {}};
  for (Eigen::Index n = 0; n < cols; ++n) e.coeffs.push_back({c(n, 0), c(n, 1), c(n, 2), c(n, 3)});
  return e;
}

int cmd_transform(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw SchemaError("--input", "transform needs an input function");
  if (o.grid.empty()) throw SchemaError("--grid", "transform needs a grid JSON file");
  if (o.kind != "sb" && o.kind != "rbf-sb") throw SchemaError("--kind", "expected 'sb' or 'rbf-sb'");
  const bool rbf = o.kind == "rbf-sb";
  const double nu = rbf ? 2.0 / (o.gamma * o.gamma) : o.fock_nu();
  const json grid_doc = read_json(o.grid);
  std::ostringstream text;
  CsvWriter csv(text);
  std::vector<std::string> cols;

  if (o.dim == 1) {
    L2Function phi;
    if (ends_with(o.input, ".csv")) {
      std::ifstream in(o.input);
      if (!in) throw SchemaError(o.input, "cannot open file");
      phi = fit_samples(read_samples(in), o.input);
    } else {
      phi = parse_hermite_document(read_json(o.input));
    }
    const auto points = parse_quaternion_grid(grid_doc);
    const auto values = sb_transform_batch(nu, std::span<const L2Function>(&phi, 1), points, o.norm());
    push_quaternion_columns(cols, "q");
    push_quaternion_columns(cols, "value");
    csv.header(cols);
    for (std::size_t p = 0; p < points.size(); ++p) {
      Quaternion v = values[0][p];
      if (rbf) v = intrinsic_exp_sq(o.gamma, points[p], -1) * v;
      csv.cell(points[p]).cell(v).end_row();
    }
  } else {
    if (ends_with(o.input, ".csv")) throw SchemaError(o.input, "sampled input is supported for --dim 1 only");
    const L2FunctionD phi = parse_hermite_d_document(read_json(o.input));
    if (std::get<HermiteExpansionD>(phi).dim != o.dim) throw SchemaError("/hermite/dim", "differs from --dim");
    const auto points = parse_complex_points(grid_doc, o.dim);
    std::vector<Complex> flat;
    for (const auto& p : points) flat.insert(flat.end(), p.begin(), p.end());
    const auto values = sb_transform_batch_d(nu, o.dim, std::span<const L2FunctionD>(&phi, 1), flat);
    for (int l = 0; l < o.dim; ++l) push_complex_columns(cols, "z" + std::to_string(l + 1));
    push_complex_columns(cols, "value");
    csv.header(cols);
    for (std::size_t p = 0; p < points.size(); ++p) {
      Complex v = values[0][p];
      if (rbf) {
        Complex z2;
        for (const auto& c : points[p]) z2 += c * c;
        v *= std::exp(-z2 / (o.gamma * o.gamma));
      }
      for (const auto& c : points[p]) csv.cell(c);
      csv.cell(v).end_row();
    }
  }
  emit(o, text.str(), out);
  return kExitOk;
}

// ---- basis -----------------------------------------------------------------------------------------

std::vector<double> parse_real_grid(const json& j) {
  if (j.is_object() && j.contains("points")) {
    const auto& pts = j["points"];
    if (!pts.is_array()) throw SchemaError("/points", "expected an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(parse_number(pts[i], "/points/" + std::to_string(i)));
    return out;
  }
  if (!j.is_object() || !j.contains("x")) throw SchemaError("/x", "expected {\"x\": [lo, hi, n]} or {\"points\": [...]}");
  const auto& a = j["x"];
  if (!a.is_array() || a.size() != 3 || !a[2].is_number_integer()) throw SchemaError("/x", "expected [lo, hi, n]");
  const double lo = parse_number(a[0], "/x/0");
  const double hi = parse_number(a[1], "/x/1");
  const int n = a[2].get<int>();
  if (n < 1 || n > 100000) throw SchemaError("/x/2", "must be in [1, 100000]");
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return out;
}

std::string index_name(const MultiIndex& n) {
  std::string s = "e[";
  for (int l = 0; l < n.dim(); ++l) s += (l ? ";" : "") + std::to_string(n[static_cast<std::size_t>(l)]);
  return s + "]";
}

int cmd_basis(const Options& o, std::ostream& out) {
  if (o.grid.empty()) throw SchemaError("--grid", "basis needs a grid JSON file");
  if (o.n_max < 0 || o.n_max > kMaxBasisIndex) throw SchemaError("--n-max", "must be in [0, 64]");
  const json grid_doc = read_json(o.grid);
  std::ostringstream text;
  CsvWriter csv(text);
  std::vector<std::string> cols;
  if (o.family == "hermite") {
    if (o.dim != 1) throw SchemaError("--dim", "the hermite family is tabulated for --dim 1");
    const double nu = o.fock_nu();
    const auto xs = parse_real_grid(grid_doc);
    cols.push_back("x");
    for (int n = 0; n <= o.n_max; ++n) cols.push_back("psi" + std::to_string(n));
    csv.header(cols);
    for (double x : xs) {
      csv.cell(x);
      for (double v : hermite_psi_all(nu, o.n_max, x)) csv.cell(v);
      csv.end_row();
    }
  } else if (o.family == "rbf") {
    if (o.dim == 1) {
      const auto points = parse_quaternion_grid(grid_doc);
      push_quaternion_columns(cols, "q");
      for (int n = 0; n <= o.n_max; ++n) push_quaternion_columns(cols, "e" + std::to_string(n));
      csv.header(cols);
      for (const auto& q : points) {
        csv.cell(q);
        for (int n = 0; n <= o.n_max; ++n) csv.cell(rbf_basis_q(o.gamma, n, q));
        csv.end_row();
      }
    } else {
      const auto points = parse_complex_points(grid_doc, o.dim);
      const auto indices = graded_indices(o.dim, o.n_max);
      for (int l = 0; l < o.dim; ++l) push_complex_columns(cols, "z" + std::to_string(l + 1));
      for (const auto& n : indices) push_complex_columns(cols, index_name(n));
      csv.header(cols);
      for (const auto& z : points) {
        for (const auto& c : z) csv.cell(c);
        for (const auto& n : indices) csv.cell(rbf_basis_d(o.gamma, n, z));
        csv.end_row();
      }
    }
  } else {
    throw SchemaError("--family", "expected 'rbf' or 'hermite'");
  }
  emit(o, text.str(), out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  AcceptanceConfig cfg;
  cfg.gamma = o.gamma;
  cfg.quad_order = o.quad_order;
  cfg.normalization = o.norm();
  cfg.seed = o.seed;
  for (const auto& t : o.tol) {
    const auto [key, v] = split_tolerance(t);
    try {
      set_tolerance(cfg.tol, key, v);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("--tol", e.what());
    }
  }
  const auto results = run_acceptance(cfg);
  bool all = true;
  json checks = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.pass;
    checks.push_back(to_json(r));
    char line[256];
    std::snprintf(line, sizeof line, "%s %-20s value=%.6e bound=%.3e\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.value, r.bound);
    text << line;
  }
  text << (all ? "all checks passed\n" : "some checks failed\n");
  json report = {{"config",
                  {{"gamma", cfg.gamma},
                   {"quad_order", cfg.quad_order},
                   {"normalization", o.normalization},
                   {"seed", cfg.seed}}},
                 {"checks", checks},
                 {"pass", all}};
  emit(o, text.str(), out);
  write_report(o.report, report);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian RBF kernels, Fock spaces and Segal-Bargmann transforms", "qrbf"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gamma", o.gamma, "kernel width gamma > 0")->check(CLI::PositiveNumber);
    sub->add_option("--dim", o.dim, "complex dimension d")->check(CLI::Range(1, 3));
    sub->add_option("--quad-order", o.quad_order, "Gauss-Hermite order")->check(CLI::Range(8, 512));
    sub->add_option("--normalization", o.normalization, "Segal-Bargmann prefactor convention")
        ->check(CLI::IsMember({"unitary", "paper"}));
    sub->add_option("--tol", o.tol, "tolerance override name=value (repeatable)");
    sub->add_option("--seed", o.seed, "random seed for generated test data");
    sub->add_option("--input", o.input, "input file");
    sub->add_option("--output", o.output, "output file (default stdout)");
    sub->add_option("--report", o.report, "JSON report file");
  };

  auto* kernel = app.add_subcommand("kernel", "evaluate a kernel at point pairs");
  add_common(kernel);
  kernel->add_option("--kernel", o.kernel, "rbf, fock, qslice, gaussian, polynomial, exponential, sb, rbf-sb");
  kernel->add_option("--z", o.z, "first point, e.g. 0,1 or 0,1;0.5,0");
  kernel->add_option("--w", o.w, "second point");
  kernel->add_option("--alpha", o.alpha, "Fock parameter (default 2/gamma^2)")->check(CLI::PositiveNumber);
  kernel->add_option("--degree", o.degree, "polynomial kernel degree")->check(CLI::NonNegativeNumber);
  kernel->add_option("--nu", o.nu, "Segal-Bargmann parameter for --kernel sb")->check(CLI::PositiveNumber);

  auto* gram = app.add_subcommand("gram", "assemble a Gram matrix and test positive semidefiniteness");
  add_common(gram);

  auto* transform = app.add_subcommand("transform", "apply a Segal-Bargmann transform on a grid");
  add_common(transform);
  transform->add_option("--grid", o.grid, "grid JSON file");
  transform->add_option("--kind", o.kind, "sb or rbf-sb")->check(CLI::IsMember({"sb", "rbf-sb"}));
  transform->add_option("--nu", o.nu, "parameter of the sb transform (default 2/gamma^2)")->check(CLI::PositiveNumber);

  auto* basis = app.add_subcommand("basis", "tabulate basis functions on a grid");
  add_common(basis);
  basis->add_option("--grid", o.grid, "grid JSON file");
  basis->add_option("--family", o.family, "rbf or hermite")->check(CLI::IsMember({"rbf", "hermite"}));
  basis->add_option("--n-max", o.n_max, "largest index (total degree on C^d)")->check(CLI::Range(0, 64));
  basis->add_option("--nu", o.nu, "Hermite parameter (default 2/gamma^2)")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  add_common(verify);

  std::vector<std::string> argv = args;
  if (argv.size() >= 2 && argv[0] == "kernel" && argv[1] == "eval") argv.erase(argv.begin() + 1);
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  }

  try {
    if (*kernel) return cmd_kernel(o, out);
    if (*gram) return cmd_gram(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*basis) return cmd_basis(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const SchemaError& e) {
    err << "schema error at " << e.what() << '\n';
    return kExitSchema;
  } catch (const WeightIncompatibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  }
  return kExitSchema;
}

}  // namespace qrbf::cli
