#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qrbf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qrbf_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_F(Cli, KernelDiagonalIsEFour) {
  const auto r = run({"kernel", "--gamma", "1", "--z", "0,1", "--w", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"value.re", "value.im"}));
  EXPECT_EQ(std::stod(rows[1][0]), std::exp(4.0));
  EXPECT_EQ(rows[1][0], "54.598150033144236");
}

TEST_F(Cli, KernelEvalFromJson) {
  const auto in = write("pairs.json", R"({"kernel": "qslice", "gamma": 1, "pairs": [[[0,1,0,0], [0,1,0,0]], [0, 0]]})");
  const auto r = run({"kernel", "eval", "--input", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].size(), 4u);
  EXPECT_EQ(rows[0][0], "value.w");
  EXPECT_NEAR(std::stod(rows[1][0]), std::exp(4.0), 1e-12);
  EXPECT_EQ(rows[2][0], "1");
}

TEST_F(Cli, GramEightPointExample) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> x;
  json pts = json::array();
  for (int a = 0; a < 8; ++a) {
    x.push_back(u(rng));
    pts.push_back(x.back());
  }
  const auto in = write("g.json", json{{"kernel", "gaussian"}, {"gamma", 1.0}, {"points", pts}}.dump());
  const auto rep = path("r.json");
  const auto r = run({"gram", "--input", in, "--report", rep});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const double d = x[a] - x[b];
      EXPECT_NEAR(std::stod(rows[a + 1][b]), std::exp(-d * d), 1e-15);
    }
  const json report = json::parse(slurp(rep));
  EXPECT_TRUE(report["psd"].get<bool>());
  EXPECT_TRUE(report.contains("min_eig"));
  EXPECT_TRUE(report.contains("tol"));
}

TEST_F(Cli, GramPolynomialKernel) {
  const auto in = write("p.json", R"({"kernel": "polynomial", "degree": 3, "points": [[1, 0], [0, 1], [-1, 0]]})");
  EXPECT_EQ(run({"gram", "--input", in}).code, 0);
}

TEST_F(Cli, SchemaErrorsExitTwo) {
  const auto bad_json = write("bad.json", "{\n  \"kernel\": \"rbf\",\n  \"points\": [[0, 1],\n");
  auto r = run({"gram", "--input", bad_json});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;

  const auto bad_field = write("f.json", R"({"kernel": "rbf", "points": [[0, 1], [0, "x"]]})");
  r = run({"gram", "--input", bad_field});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/points/1"), std::string::npos) << r.err;

  EXPECT_EQ(run({"kernel", "--gamma", "-1", "--z", "0", "--w", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--quad-order", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "--tol", "nonsense=1e-3"}).code, 2);
  EXPECT_EQ(run({"basis", "--dim", "4", "--grid", bad_json}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, TransformHermiteDocument) {
  const auto in = write("h.json", R"({"hermite": {"nu": 2, "coeffs": [0, 1]}})");
  const auto grid = write("grid.json", R"({"points": [[0.5, 0, 0, 0], [0, 0, 0.3, 0]]})");
  const auto r = run({"transform", "--gamma", "1", "--kind", "rbf-sb", "--input", in, "--grid", grid});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  ASSERT_EQ(rows[0].size(), 8u);
  // ψ_1 ↦ e_1(q) = √2 q e^{−q²} at γ = 1.
  EXPECT_NEAR(std::stod(rows[1][4]), std::sqrt(2.0) * 0.5 * std::exp(-0.25), 1e-15);
  EXPECT_NEAR(std::stod(rows[2][6]), std::sqrt(2.0) * 0.3 * std::exp(0.09), 1e-15);
}

TEST_F(Cli, TransformSampledInput) {
  std::string csv = "# decay rate=2 degree=1\nx,value\n";
  std::string bare = "x,value\n";
  for (int a = -20; a <= 20; ++a) {
    const double x = 0.2 * a;
    std::ostringstream row;
    row.precision(17);
    row << x << ',' << x * std::exp(-x * x) << '\n';
    csv += row.str();
    bare += row.str();
  }
  const auto grid = write("grid.json", R"({"points": [[0.5, 0, 0, 0]]})");
  const auto with = run({"transform", "--kind", "sb", "--nu", "2", "--input", write("s.csv", csv), "--grid", grid});
  ASSERT_EQ(with.code, 0) << with.err;
  const auto without = run({"transform", "--kind", "sb", "--nu", "2", "--input", write("b.csv", bare), "--grid", grid});
  EXPECT_EQ(without.code, 2);
  EXPECT_NE(without.err.find("certificate"), std::string::npos) << without.err;

  // With ν = 2, h_1 = 4x and ‖h_1‖² = 4√(π/2), so x e^{−x²} = ψ_1 ‖h_1‖/4 and its image is that multiple of √2 q.
  const double c = std::sqrt(4.0 * std::sqrt(std::acos(-1.0) / 2.0)) / 4.0;
  EXPECT_NEAR(std::stod(parse_csv(with.out)[1][4]), c * std::sqrt(2.0) * 0.5, 1e-12);
}

TEST_F(Cli, BasisTables) {
  const auto grid = write("x.json", R"({"x": [-1, 1, 5]})");
  auto r = run({"basis", "--family", "hermite", "--nu", "1", "--n-max", "3", "--grid", grid});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].size(), 5u);
  EXPECT_NEAR(std::stod(rows[3][1]), std::pow(std::acos(-1.0), -0.25), 1e-15);

  const auto qgrid = write("q.json", R"({"grid": {"x": [0, 1, 2], "y": [0, 1, 2]}})");
  r = run({"basis", "--family", "rbf", "--n-max", "2", "--grid", qgrid});
  ASSERT_EQ(r.code, 0) << r.err;
  rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].size(), 16u);
  EXPECT_EQ(rows[1][4], "1");  // e_0(0)
}

TEST_F(Cli, VerifyIsDeterministic) {
  const std::string exe = QRBF_CLI_PATH;
  const auto r1 = path("v1.json"), r2 = path("v2.json");
  const auto o1 = path("o1.txt"), o2 = path("o2.txt");
  ASSERT_EQ(std::system((exe + " verify --gamma 1 --quad-order 80 --report " + r1 + " > " + o1).c_str()), 0);
  ASSERT_EQ(std::system((exe + " verify --gamma 1 --quad-order 80 --report " + r2 + " > " + o2).c_str()), 0);
  EXPECT_EQ(slurp(r1), slurp(r2));
  EXPECT_EQ(slurp(o1), slurp(o2));
  const json report = json::parse(slurp(r1));
  EXPECT_TRUE(report["pass"].get<bool>());
  EXPECT_EQ(report["checks"].size(), 12u);
  for (const auto& c : report["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("value"));
    EXPECT_TRUE(c.contains("bound"));
    EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
  }
}

TEST_F(Cli, VerifyFailsWithImpossibleTolerance) {
  const auto r = run({"verify", "--tol", "fock_orthogonality=1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL fock_orthogonality"), std::string::npos);
}
