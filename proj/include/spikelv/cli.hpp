#pragma once

// Batch front end. Each subcommand reads files, writes files into the output
// directory, and records the seed and a config hash in every artifact.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spikelv/spike_train.hpp"
#include "spikelv/synthetic.hpp"

namespace spikelv::cli {

inline constexpr const char* kToolName = "spikelv";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kEnvPrefix = "SPIKELV_";

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInternal = 3 };

struct SynthConfig {
  ProcessKind process = ProcessKind::kPoisson;
  std::size_t tags = 100;
  double rate = 0.01;                 // events per second when sizes are not drawn
  std::vector<double> kappas{1.0};    // assigned to tags round-robin
  double amplitude = 0.5;
  double period = 86400.0;
  double size_exponent = 0.0;         // > 1: per-tag expected size from a power law
  std::uint64_t size_max = 10000;
  std::string tag_prefix = "tag";
  std::string events_name = "synth_events.tsv";
};

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::optional<Window> window;
  std::string classes = "1,2,5,50,500,5000,25000,100000";
  std::optional<std::int64_t> bin_width;  // overrides per-class interval bins
  std::int64_t activity_bin = 60;
  int bins_per_decade = 10;
  std::size_t lv_bins = 30;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = ".";
  bool emit_csv = true;
  bool emit_json = true;
  bool quantize = false;
  bool drop_unit_intervals = false;
  bool emit_events = false;
  int threads = 0;
  SynthConfig synth;

  /// Canonical JSON of everything that affects outputs (not out_dir/threads).
  nlohmann::json canonical() const;
  /// Hex FNV-1a-64 of canonical().dump().
  std::string hash() const;
};

/// Absolute input paths; throws DataError for a missing input.
void resolve_paths(RunConfig& config);

nlohmann::json cmd_ingest(const RunConfig& config);
nlohmann::json cmd_report(const RunConfig& config);
nlohmann::json cmd_lv(const RunConfig& config);
nlohmann::json cmd_null(const RunConfig& config);
nlohmann::json cmd_dist(const RunConfig& config);
nlohmann::json cmd_zipf(const RunConfig& config);
nlohmann::json cmd_corr(const RunConfig& config);
nlohmann::json cmd_synth(const RunConfig& config);

/// Full command line entry point; returns an ExitCode.
int run(int argc, char** argv);

}  // namespace spikelv::cli
