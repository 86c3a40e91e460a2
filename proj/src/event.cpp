#include "spikelv/event.hpp"

#include <charconv>

#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace spikelv {

namespace {

bool is_valid_utf8(std::string_view s) {
  std::int32_t i = 0;
  const auto n = static_cast<std::int32_t>(s.size());
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  while (i < n) {
    UChar32 c;
    U8_NEXT(p, i, n, c);
    if (c < 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> normalize_tag(std::string_view raw) {
  raw = trim(raw);
  if (!raw.empty() && raw.front() == '#') raw.remove_prefix(1);
  if (raw.empty() || !is_valid_utf8(raw)) return std::nullopt;

  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<std::int32_t>(raw.size())));
  u.foldCase(U_FOLD_CASE_DEFAULT);
  std::string out;
  u.toUTF8String(out);
  if (out.empty()) return std::nullopt;
  return out;
}

ParsedLine parse_event_line(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line.front() == '#') return {};
  if (trim(line).empty()) return {};

  ParsedLine bad{LineKind::kMalformed, {}};
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) return bad;

  const std::string_view time_field = line.substr(0, tab);
  std::int64_t t = 0;
  const auto [ptr, ec] =
      std::from_chars(time_field.data(), time_field.data() + time_field.size(), t);
  if (ec != std::errc{} || ptr != time_field.data() + time_field.size() || t < 0) {
    return bad;
  }
  auto tag = normalize_tag(line.substr(tab + 1));
  if (!tag) return bad;
  return {LineKind::kEvent, EventRecord{t, std::move(*tag)}};
}

std::string format_event_line(const EventRecord& record) {
  std::string out = std::to_string(record.time);
  out += '\t';
  out += record.tag;
  return out;
}

}  // namespace spikelv
