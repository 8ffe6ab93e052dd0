#include "afc/csv.hpp"

#include <cstdio>
#include <fstream>

#include "afc/errors.hpp"

namespace afc {

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) throw InputError("csv row width mismatch");
  std::string line;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_g12(values[i]);
  }
  line += '\n';
  body_ += line;
}

std::string CsvWriter::str() const {
  std::string s = "# ";
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i) s += ',';
    s += columns_[i];
  }
  s += '\n';
  s += body_;
  return s;
}

void CsvWriter::write(const std::string& path) const { write_text_file(path, str()); }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << contents;
}

}  // namespace afc
