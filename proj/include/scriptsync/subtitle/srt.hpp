// Copyright 2026 The ScriptSync Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// SubRip (.srt) reader and writer.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "scriptsync/core/text.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

struct SubtitleCue {
  int index = 1;
  double start = 0.0;
  double end = 0.0;
  std::vector<std::string> lines;

  friend bool operator==(const SubtitleCue&, const SubtitleCue&) = default;
};

namespace srt_detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool parse_digits(std::string_view s, std::size_t count, std::int64_t& out) {
  if (s.size() != count) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

// "HH:MM:SS,mmm" (hours may have more than two digits; '.' accepted for ',').
inline bool parse_timestamp(std::string_view s, std::int64_t& ms) {
  s = trim(s);
  const auto c1 = s.find(':');
  if (c1 == std::string_view::npos || c1 == 0) return false;
  const auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return false;
  const auto comma = s.find_first_of(",.", c2 + 1);
  if (comma == std::string_view::npos) return false;
  std::int64_t h, m, sec, milli;
  if (!parse_digits(s.substr(0, c1), c1, h)) return false;
  if (!parse_digits(s.substr(c1 + 1, c2 - c1 - 1), 2, m) || m > 59) return false;
  if (!parse_digits(s.substr(c2 + 1, comma - c2 - 1), 2, sec) || sec > 59) return false;
  if (!parse_digits(s.substr(comma + 1), 3, milli)) return false;
  ms = ((h * 60 + m) * 60 + sec) * 1000 + milli;
  return true;
}

inline std::int64_t to_ms(double seconds) { return std::llround(seconds * 1000.0); }

}  // namespace srt_detail

inline std::string format_srt_timestamp(double seconds) {
  std::int64_t ms = srt_detail::to_ms(seconds);
  if (ms < 0) ms = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld", static_cast<long long>(ms / 3600000),
                static_cast<long long>(ms / 60000 % 60), static_cast<long long>(ms / 1000 % 60),
                static_cast<long long>(ms % 1000));
  return buf;
}

// Parses SRT text. Accepts a UTF-8 BOM, CRLF line endings and a missing
// trailing newline. Cues are returned sorted by start (stable).
inline std::vector<SubtitleCue> parse_srt(std::string_view bytes) {
  using namespace srt_detail;
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  if (auto bad = text::find_invalid_utf8(bytes)) {
    throw ParseError("subtitle file is not valid UTF-8 (byte offset " + std::to_string(*bad) +
                     "); re-encode it as UTF-8");
  }

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= bytes.size();) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }

  std::vector<SubtitleCue> cues;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (trim(lines[i]).empty()) {
      ++i;
      continue;
    }
    const std::size_t index_line = i + 1;
    std::string_view index_text = trim(lines[i]);
    std::int64_t index = 0;
    if (!parse_digits(index_text, index_text.size(), index) || index_text.size() > 9) {
      throw ParseError("expected numeric cue index, got '" + std::string(index_text) + "'", index_line);
    }
    ++i;
    if (i >= lines.size()) throw ParseError("cue " + std::to_string(index) + " has no timestamp line", index_line);
    const std::size_t time_line = i + 1;
    std::string_view timing = trim(lines[i]);
    const auto arrow = timing.find("-->");
    std::int64_t start_ms = 0, end_ms = 0;
    if (arrow == std::string_view::npos) throw ParseError("malformed timestamp line", time_line);
    std::string_view rhs = trim(timing.substr(arrow + 3));
    // Drop trailing position hints such as "X1:40 X2:600".
    if (auto sp = rhs.find_first_of(" \t"); sp != std::string_view::npos) rhs = rhs.substr(0, sp);
    if (!parse_timestamp(timing.substr(0, arrow), start_ms) || !parse_timestamp(rhs, end_ms)) {
      throw ParseError("malformed timestamp '" + std::string(timing) + "'", time_line);
    }
    if (end_ms <= start_ms) throw ParseError("cue ends before it starts", time_line);
    ++i;
    SubtitleCue cue{static_cast<int>(index), start_ms / 1000.0, end_ms / 1000.0, {}};
    while (i < lines.size() && !trim(lines[i]).empty()) {
      cue.lines.emplace_back(lines[i]);
      ++i;
    }
    cues.push_back(std::move(cue));
  }
  std::stable_sort(cues.begin(), cues.end(), [](const SubtitleCue& a, const SubtitleCue& b) { return a.start < b.start; });
  return cues;
}

inline std::string format_srt(const std::vector<SubtitleCue>& cues) {
  std::string out;
  for (std::size_t i = 0; i < cues.size(); ++i) {
    const auto& c = cues[i];
    if (i) out += '\n';
    out += std::to_string(c.index);
    out += '\n';
    out += format_srt_timestamp(c.start);
    out += " --> ";
    out += format_srt_timestamp(c.end);
    out += '\n';
    for (const auto& line : c.lines) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace scriptsync
