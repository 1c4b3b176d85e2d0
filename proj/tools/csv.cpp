#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qrbf/json_io.hpp"

namespace qrbf::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    sep();
    os_ << n;
  }
  end_row();
}

void CsvWriter::sep() {
  if (!first_) os_ << ',';
  first_ = false;
}

CsvWriter& CsvWriter::cell(double v) {
  sep();
  os_ << format_number(v);
  return *this;
}

CsvWriter& CsvWriter::cell(const Complex& z) { return cell(z.real()).cell(z.imag()); }

CsvWriter& CsvWriter::cell(const Quaternion& q) { return cell(q.r).cell(q.i).cell(q.j).cell(q.k); }

void CsvWriter::end_row() {
  os_ << '\n';
  first_ = true;
}

void push_complex_columns(std::vector<std::string>& cols, const std::string& name) {
  cols.push_back(name + ".re");
  cols.push_back(name + ".im");
}

void push_quaternion_columns(std::vector<std::string>& cols, const std::string& name) {
  for (const char* s : {".w", ".x", ".y", ".z"}) cols.push_back(name + s);
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double to_number(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw SchemaError(where, "expected a number, got '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size() || !std::isfinite(v)) throw SchemaError(where, "expected a finite number, got '" + s + "'");
  return v;
}

}  // namespace

SampleTable read_samples(std::istream& is) {
  SampleTable t;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::size_t width = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = "line " + std::to_string(lineno);
    if (line.empty()) continue;
    if (line[0] == '#') {
      double rate = 0.0;
      int degree = 0;
      if (std::sscanf(line.c_str(), "# decay rate=%lf degree=%d", &rate, &degree) == 2) {
        if (!(rate > 0.0) || degree < 0) throw SchemaError(where, "decay certificate needs rate > 0 and degree >= 0");
        t.has_certificate = true;
        t.rate = rate;
        t.degree = degree;
      }
      continue;
    }
    const auto cells = split(line);
    if (!header_seen) {
      header_seen = true;
      width = cells.size();
      if (width != 2 && width != 5) throw SchemaError(where, "header must have 2 (x,value) or 5 (x,value.w..z) columns");
      continue;
    }
    if (cells.size() != width) throw SchemaError(where, "expected " + std::to_string(width) + " columns");
    t.x.push_back(to_number(cells[0], where));
    if (width == 2) {
      t.values.emplace_back(to_number(cells[1], where));
    } else {
      t.values.push_back({to_number(cells[1], where), to_number(cells[2], where), to_number(cells[3], where),
                          to_number(cells[4], where)});
    }
  }
  if (!header_seen) throw SchemaError("line 1", "missing header row");
  if (t.x.empty()) throw SchemaError("line " + std::to_string(lineno), "no sample rows");
  return t;
}

}  // namespace qrbf::cli
