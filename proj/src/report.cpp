#include "cosserat/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cosserat {

std::string format_sig17(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("refusing to serialize a non-finite value");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

Record::Record(const std::string& kind, const std::string& config_hash, std::uint64_t seed) {
  add("record", kind);
  add("config_hash", config_hash);
  add("seed", static_cast<long long>(seed));
}

Record& Record::add(const std::string& key, double v) {
  fields_.emplace_back(key, format_sig17(v));
  return *this;
}

Record& Record::add(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, "\"" + escape_json(v) + "\"");
  return *this;
}

Record& Record::add(const std::string& key, const char* v) { return add(key, std::string(v)); }

Record& Record::add(const std::string& key, bool v) {
  fields_.emplace_back(key, v ? "true" : "false");
  return *this;
}

Record& Record::add(const std::string& key, long long v) {
  fields_.emplace_back(key, std::to_string(v));
  return *this;
}

std::string Record::to_json() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + escape_json(fields_[i].first) + "\":" + fields_[i].second;
  }
  out += "}";
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw std::runtime_error("failed while writing '" + path + "'");
}

void write_csv(const std::string& path, const CsvRow& header, const std::vector<CsvRow>& rows) {
  std::string out;
  auto append_row = [&out](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ",";
      out += row[i];
    }
    out += "\n";
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  write_text_file(path, out);
}

}  // namespace cosserat
