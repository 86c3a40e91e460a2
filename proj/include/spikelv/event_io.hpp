#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "spikelv/spike_train.hpp"

namespace spikelv {

/// Reads text lines from a plain or gzip-compressed file (chosen by a ".gz"
/// extension). Throws DataError if the file cannot be opened.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);
  ~LineReader();
  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  /// Next line without its terminator; false at end of file.
  bool next(std::string& line);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Writes text to a plain or gzip-compressed file (by extension).
class LineWriter {
 public:
  explicit LineWriter(const std::filesystem::path& path);
  ~LineWriter();
  LineWriter(const LineWriter&) = delete;
  LineWriter& operator=(const LineWriter&) = delete;

  void write_line(std::string_view line);
  /// Flushes and closes; throws DataError on a write failure.
  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Feeds every line of the file to the ingestor.
void read_events(const std::filesystem::path& path, Ingestor& ingestor);

/// Emits one line per raw occurrence (multiplicities expanded), ordered by
/// time and then tag, preceded by optional '#' comment lines.
void write_corpus_events(const std::filesystem::path& path, const Corpus& corpus,
                         std::string_view comment = {});

}  // namespace spikelv
