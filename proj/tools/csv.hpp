#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qrbf/quaternion.hpp"

namespace qrbf::cli {

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& names);
  CsvWriter& cell(double v);
  CsvWriter& cell(const Complex& z);
  CsvWriter& cell(const Quaternion& q);
  void end_row();

 private:
  void sep();

  std::ostream& os_;
  bool first_ = true;
};

// Column names for complex and quaternion groups: name.re/name.im and name.w/.x/.y/.z.
void push_complex_columns(std::vector<std::string>& cols, const std::string& name);
void push_quaternion_columns(std::vector<std::string>& cols, const std::string& name);

/// Sampled function table: optional leading "# decay rate=<r> degree=<p>" line, a header row, then rows of
/// x followed by either one real value or four quaternion components.
struct SampleTable {
  bool has_certificate = false;
  double rate = 0.0;
  int degree = 0;
  std::vector<double> x;
  std::vector<Quaternion> values;
};

/// Throws qrbf::SchemaError with a "line N" field on malformed input.
SampleTable read_samples(std::istream& is);

}  // namespace qrbf::cli
