#include <gtest/gtest.h>

#include "qrbf/json_io.hpp"

using namespace qrbf;

namespace {

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST(JsonIo, Scalars) {
  EXPECT_EQ(parse_complex(json::parse("[1.5, -2]"), "/z"), Complex(1.5, -2.0));
  EXPECT_EQ(parse_complex(json::parse("3"), "/z"), Complex(3.0));
  EXPECT_EQ(parse_quaternion(json::parse("[1, 2, 3, 4]"), "/q"), (Quaternion{1.0, 2.0, 3.0, 4.0}));
  EXPECT_EQ(field_of([] { parse_quaternion(json::parse("[1, 2, 3]"), "/q"); }), "/q");
  EXPECT_EQ(field_of([] { parse_number(json::parse("\"x\""), "/a/0"); }), "/a/0");
  EXPECT_EQ(field_of([] { parse_unit(json::parse("[0, 1, 1, 0]"), "/unit"); }), "/unit");
}

TEST(JsonIo, QuaternionRoundTrip) {
  const Quaternion q{0.1, -1e-300, 2.5e17, 1.0 / 3.0};
  EXPECT_EQ(parse_quaternion(json::parse(to_json(q).dump()), "/q"), q);
}

TEST(JsonIo, SeriesDocument) {
  const auto doc = parse_series_document(json::parse(R"({"gamma": 2, "coeffs": [[1,0,0,0], [0,0,1,0]]})"));
  EXPECT_EQ(doc.gamma, 2.0);
  EXPECT_EQ(doc.series.coeff(1), Quaternion::unit_j());
  EXPECT_EQ(field_of([] { parse_series_document(json::parse(R"({"gamma": -1, "coeffs": [1]})")); }), "/gamma");
  EXPECT_EQ(field_of([] { parse_series_document(json::parse(R"({"gamma": 1, "coeffs": [1, [0, 1]]})")); }),
            "/coeffs/1");
}

TEST(JsonIo, HermiteDocuments) {
  const auto h = parse_hermite_document(json::parse(R"({"hermite": {"nu": 2, "coeffs": [1, [0,1,0,0]]}})"));
  EXPECT_EQ(h.nu, 2.0);
  ASSERT_EQ(h.coeffs.size(), 2u);
  EXPECT_EQ(h.coeffs[1], Quaternion::unit_i());
  EXPECT_EQ(field_of([] { parse_hermite_document(json::parse(R"({"hermite": {"coeffs": [1]}})")); }), "/hermite/nu");

  const auto d = parse_hermite_d_document(
      json::parse(R"({"hermite": {"nu": 1, "dim": 2, "terms": [{"index": [1, 0], "coeff": [0, 1]}]}})"));
  EXPECT_EQ(d.dim, 2);
  EXPECT_EQ(d.coeffs.at(MultiIndex{1, 0}), Complex(0.0, 1.0));
  EXPECT_EQ(field_of([] {
              parse_hermite_d_document(
                  json::parse(R"({"hermite": {"nu": 1, "dim": 2, "terms": [{"index": [1], "coeff": 1}]}})"));
            }),
            "/hermite/terms/0/index");
}

TEST(JsonIo, GramInput) {
  const auto in = parse_gram_input(json::parse(R"({"kernel": "rbf", "gamma": 1, "points": [[0, 1], [[0.5, 0]]]})"));
  EXPECT_EQ(in.kernel, KernelId::rbf);
  const auto& pts = std::get<ComplexPoints>(in.points);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0][0], Complex(0.0, 1.0));
  EXPECT_EQ(pts[1][0], Complex(0.5, 0.0));

  const auto real = parse_gram_input(json::parse(R"({"kernel": "gaussian", "points": [[0, 0], [1, 2]]})"));
  EXPECT_EQ(std::get<RealPoints>(real.points)[1].size(), 2u);

  EXPECT_EQ(field_of([] { parse_gram_input(json::parse(R"({"kernel": "nope", "points": []})")); }), "/kernel");
  EXPECT_EQ(field_of([] { parse_gram_input(json::parse(R"({"kernel": "qslice", "points": [[1, 2]]})")); }),
            "/points/0");
}

TEST(JsonIo, Grids) {
  const auto g = parse_quaternion_grid(json::parse(R"({"grid": {"x": [-1, 1, 3], "y": [0, 2, 2], "unit": [0, 0, 1, 0]}})"));
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.back(), (Quaternion{1.0, 0.0, 2.0, 0.0}));
  const auto pts = parse_complex_points(json::parse(R"({"points": [[[1, 0], 2]]})"), 2);
  EXPECT_EQ(pts[0][1], Complex(2.0));
  EXPECT_EQ(field_of([] { parse_complex_points(json::parse(R"({"points": [[1, 2, 3]]})"), 2); }), "/points/0");
}
