#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spikelv {

/// One raw observation: an integer second and a normalized tag.
struct EventRecord {
  std::int64_t time = 0;
  std::string tag;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Strips one leading '#' and applies full Unicode case folding. Accents are
/// kept ("ledébat" and "ledebat" stay distinct). Returns nullopt for invalid
/// UTF-8 or a tag that is empty after normalization.
std::optional<std::string> normalize_tag(std::string_view raw);

enum class LineKind { kEvent, kSkip, kMalformed };

struct ParsedLine {
  LineKind kind = LineKind::kSkip;
  EventRecord record;
};

/// Parses `<unix_seconds>\t<tag>`. Blank lines and lines with '#' in column 1
/// are skipped; everything else that fails to parse is malformed.
ParsedLine parse_event_line(std::string_view line);

/// Inverse of parse_event_line for a valid record.
std::string format_event_line(const EventRecord& record);

}  // namespace spikelv
