#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace spikelv {

/// CSV file with one '#'-prefixed JSON metadata line, then a header row.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const nlohmann::json& metadata,
            const std::vector<std::string>& columns);

  void row(const std::vector<std::string>& fields);
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
};

/// Shortest round-trippable text for a double ("nan"/"inf" for non-finite).
std::string format_number(double v);
std::string format_number(const std::optional<double>& v);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace spikelv
