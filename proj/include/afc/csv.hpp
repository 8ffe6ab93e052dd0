#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace afc {

// CSV with a single '#'-prefixed header line naming columns (units in
// brackets where meaningful) and locale-independent rows at 12 significant
// digits.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void add_row(const std::vector<double>& values);
  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::string body_;
};

std::string format_g12(double v);

// FNV-1a over a byte string; stamped into run manifests.
std::uint64_t fnv1a(const std::string& bytes);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace afc
