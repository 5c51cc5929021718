#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cosserat {

/// 17 significant digits; round-trips exactly through strtod.
std::string format_sig17(double v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex16(std::uint64_t v);

/// One JSON-lines record. Insertion order is emission order, numbers are
/// printed with 17 significant digits, so identical inputs give
/// byte-identical lines.
class Record {
 public:
  Record(const std::string& kind, const std::string& config_hash, std::uint64_t seed);

  Record& add(const std::string& key, double v);
  Record& add(const std::string& key, const std::string& v);
  Record& add(const std::string& key, const char* v);
  Record& add(const std::string& key, bool v);
  Record& add(const std::string& key, long long v);

  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

using CsvRow = std::vector<std::string>;

void write_text_file(const std::string& path, const std::string& contents);
void write_csv(const std::string& path, const CsvRow& header, const std::vector<CsvRow>& rows);

}  // namespace cosserat
