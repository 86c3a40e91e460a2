#include "spikelv/event_io.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>
#include <vector>

#include <zlib.h>

#include "spikelv/error.hpp"

namespace spikelv {

namespace {

bool is_gzip_path(const std::filesystem::path& path) { return path.extension() == ".gz"; }

}  // namespace

struct LineReader::Impl {
  std::FILE* file = nullptr;
  gzFile gz = nullptr;
  std::vector<char> buf = std::vector<char>(1 << 16);

  ~Impl() {
    if (file) std::fclose(file);
    if (gz) gzclose(gz);
  }

  // Reads one chunk into buf; returns nullptr at EOF.
  const char* chunk() {
    if (gz) return gzgets(gz, buf.data(), static_cast<int>(buf.size()));
    return std::fgets(buf.data(), static_cast<int>(buf.size()), file);
  }
};

LineReader::LineReader(const std::filesystem::path& path) : impl_(std::make_unique<Impl>()) {
  if (is_gzip_path(path)) {
    impl_->gz = gzopen(path.c_str(), "rb");
    if (!impl_->gz) throw DataError("cannot open input: " + path.string());
  } else {
    impl_->file = std::fopen(path.c_str(), "rb");
    if (!impl_->file) throw DataError("cannot open input: " + path.string());
  }
}

LineReader::~LineReader() = default;

bool LineReader::next(std::string& line) {
  line.clear();
  bool any = false;
  while (const char* s = impl_->chunk()) {
    any = true;
    line += s;
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
  }
  if (impl_->gz) {
    int err = Z_OK;
    gzerror(impl_->gz, &err);
    if (err != Z_OK && err != Z_STREAM_END) throw DataError("corrupt gzip input");
  }
  return any;
}

struct LineWriter::Impl {
  std::FILE* file = nullptr;
  gzFile gz = nullptr;
  std::string path;

  ~Impl() {
    if (file) std::fclose(file);
    if (gz) gzclose(gz);
  }
};

LineWriter::LineWriter(const std::filesystem::path& path) : impl_(std::make_unique<Impl>()) {
  impl_->path = path.string();
  if (is_gzip_path(path)) {
    impl_->gz = gzopen(path.c_str(), "wb");
    if (!impl_->gz) throw DataError("cannot open output: " + impl_->path);
  } else {
    impl_->file = std::fopen(path.c_str(), "wb");
    if (!impl_->file) throw DataError("cannot open output: " + impl_->path);
  }
}

LineWriter::~LineWriter() = default;

void LineWriter::write_line(std::string_view line) {
  bool ok;
  if (impl_->gz) {
    ok = gzwrite(impl_->gz, line.data(), static_cast<unsigned>(line.size())) ==
             static_cast<int>(line.size()) &&
         gzputc(impl_->gz, '\n') == '\n';
  } else {
    ok = std::fwrite(line.data(), 1, line.size(), impl_->file) == line.size() &&
         std::fputc('\n', impl_->file) == '\n';
  }
  if (!ok) throw DataError("write failed: " + impl_->path);
}

void LineWriter::close() {
  int rc = 0;
  if (impl_->gz) {
    rc = gzclose(impl_->gz) == Z_OK ? 0 : -1;
    impl_->gz = nullptr;
  } else if (impl_->file) {
    rc = std::fclose(impl_->file);
    impl_->file = nullptr;
  }
  if (rc != 0) throw DataError("close failed: " + impl_->path);
}

void read_events(const std::filesystem::path& path, Ingestor& ingestor) {
  LineReader reader(path);
  std::string line;
  while (reader.next(line)) ingestor.add_line(line);
}

void write_corpus_events(const std::filesystem::path& path, const Corpus& corpus,
                         std::string_view comment) {
  std::vector<std::tuple<std::int64_t, std::size_t, std::uint32_t>> events;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& tr = corpus.trains()[k];
    for (std::size_t i = 0; i < tr.n_spikes(); ++i) {
      events.emplace_back(tr.times()[i], k, tr.counts()[i]);
    }
  }
  // Trains are tag-sorted, so the train index orders ties by tag.
  std::sort(events.begin(), events.end());

  LineWriter out(path);
  if (!comment.empty()) out.write_line("# " + std::string(comment));
  std::string line;
  for (const auto& [t, k, c] : events) {
    line = format_event_line({t, corpus.trains()[k].tag()});
    for (std::uint32_t r = 0; r < c; ++r) out.write_line(line);
  }
  out.close();
}

}  // namespace spikelv
