#include "spikelv/output.hpp"

#include <charconv>
#include <cmath>

#include "spikelv/error.hpp"

namespace spikelv {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, const nlohmann::json& metadata,
                     const std::vector<std::string>& columns)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(columns.size()) {
  if (!out_) throw DataError("cannot open output: " + path.string());
  out_ << "# " << metadata.dump() << '\n';
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) throw Error("CSV row width mismatch in " + path_.string());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(fields[i]);
  }
  out_ << '\n';
}

void CsvWriter::close() {
  out_.close();
  if (!out_) throw DataError("write failed: " + path_.string());
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("nan");
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open output: " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace spikelv
