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

// Subtitle cleanup and cue-to-turn segmentation.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/subtitle/srt.hpp"
#include "scriptsync/subtitle/tokenize.hpp"

namespace scriptsync {

struct CleanCue {
  double start = 0.0;
  double end = 0.0;
  std::vector<Token> tokens;
  // Token positions where a dialogue dash introduces a new speaker.
  std::vector<std::size_t> speaker_breaks;
};

namespace markup_detail {

inline std::string remove_tags(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '<' || c == '{') {
      const char close = c == '<' ? '>' : '}';
      const auto j = line.find(close, i + 1);
      if (j != std::string_view::npos) {
        i = j;
        continue;
      }
    }
    out += c;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_music_notes(std::string_view s) {
  constexpr std::string_view notes[] = {"♪", "♫"};
  bool changed = true;
  while (changed) {
    changed = false;
    s = trim(s);
    for (auto n : notes) {
      if (s.substr(0, n.size()) == n) {
        s.remove_prefix(n.size());
        changed = true;
      }
      if (s.size() >= n.size() && s.substr(s.size() - n.size()) == n) {
        s.remove_suffix(n.size());
        changed = true;
      }
    }
  }
  return s;
}

inline bool is_caption(std::string_view s) {
  if (s.size() < 2) return false;
  return (s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')');
}

// Dialogue dash at the start of `s`: hyphen, en dash or em dash.
inline std::size_t dash_length(std::string_view s) {
  if (s.substr(0, 1) == "-" && s.substr(0, 2) != "--") return 1;
  if (s.substr(0, 3) == "\u2013" || s.substr(0, 3) == "\u2014") return 3;
  return 0;
}

// Length of a leading "NAME:" speaker prefix in capitals, 0 if none.
inline std::size_t speaker_prefix_length(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos || colon < 2) return 0;
  int letters = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = s[i];
    if (c >= 'A' && c <= 'Z') {
      ++letters;
    } else if (!(c == ' ' || c == '.' || c == '\'' || c == '-' || (c >= '0' && c <= '9'))) {
      return 0;
    }
  }
  if (letters < 2 || !(s[0] >= 'A' && s[0] <= 'Z')) return 0;
  std::size_t end = colon + 1;
  while (end < s.size() && (s[end] == ' ' || s[end] == '\t')) ++end;
  return end;
}

}  // namespace markup_detail

// Removes formatting tags (<i>, {\an8}), whole-line sound captions
// ("[door slams]", "(sighs)"), music notes and capitalized "NAME:" speaker
// prefixes, then tokenizes what remains. Dialogue dashes are consumed and
// recorded as speaker breaks.
inline CleanCue strip_markup(const SubtitleCue& cue) {
  using namespace markup_detail;
  CleanCue clean{cue.start, cue.end, {}, {}};
  // A dash or name prefix with no text of its own marks the next tokens.
  bool pending_break = false;
  for (const auto& raw : cue.lines) {
    const std::string untagged = remove_tags(raw);
    std::string_view line = strip_music_notes(untagged);
    if (line.empty() || is_caption(line)) continue;

    // Split the line into dialogue segments at a leading dash and at
    // whitespace-delimited dashes.
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::string_view rest = trim(line.substr(pos));
      if (rest.empty()) break;
      const std::size_t offset = line.size() - rest.size();
      bool dashed = false;
      if (std::size_t d = dash_length(rest)) {
        dashed = true;
        rest = trim(rest.substr(d));
      }
      // Next dash surrounded by spaces ends this segment.
      std::size_t seg_end = rest.size();
      for (std::size_t i = 1; i + 1 < rest.size(); ++i) {
        if (rest[i - 1] != ' ') continue;
        const std::size_t d = dash_length(rest.substr(i));
        if (d && i + d < rest.size() && rest[i + d] == ' ') {
          seg_end = i;
          break;
        }
      }
      std::string_view segment = trim(rest.substr(0, seg_end));
      if (std::size_t p = speaker_prefix_length(segment)) {
        segment = segment.substr(p);
        dashed = true;
      }
      if (!is_caption(segment)) {
        auto tokens = tokenize(segment);
        pending_break = pending_break || dashed;
        if (pending_break && !tokens.empty()) {
          clean.speaker_breaks.push_back(clean.tokens.size());
          pending_break = false;
        }
        for (auto& t : tokens) clean.tokens.push_back(std::move(t));
      }
      const std::size_t consumed = (rest.data() - line.data()) + seg_end;
      if (consumed <= offset) break;
      pos = consumed;
    }
  }
  return clean;
}

namespace segment_detail {

inline double round_ms(double t) { return std::round(t * 1000.0) / 1000.0; }

// Piece boundaries inside one cue: positions k in (0, n) where a new turn
// begins.
inline std::vector<std::size_t> split_points(const CleanCue& cue) {
  std::vector<std::size_t> points;
  bool pending = false;
  const auto& tokens = cue.tokens;
  std::size_t next_break = 0;
  // Straight double quotes alternate between opening and closing.
  bool quote_open = false;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    while (next_break < cue.speaker_breaks.size() && cue.speaker_breaks[next_break] < k) ++next_break;
    const bool dash = next_break < cue.speaker_breaks.size() && cue.speaker_breaks[next_break] == k;
    const std::string_view t = tokens[k].text;
    const bool terminal = t == "." || t == "!" || t == "?";
    bool closing = is_closing_punct(t);
    if (t == "\"") {
      closing = quote_open;
      quote_open = !quote_open;
    }
    const bool absorbed = terminal || t == kEllipsis || closing;
    if (k > 0 && (dash || (pending && !absorbed))) {
      points.push_back(k);
      pending = false;
    }
    if (terminal) {
      pending = true;
    } else if (!absorbed) {
      pending = false;
    }
  }
  return points;
}

// True when the cue's final punctuation run contains a sentence-final mark,
// the ellipsis included.
inline bool closes_at_end(const CleanCue& cue) {
  for (auto it = cue.tokens.rbegin(); it != cue.tokens.rend(); ++it) {
    if (is_sentence_final(it->text)) return true;
    if (!is_closing_punct(it->text)) return false;
  }
  return false;
}

}  // namespace segment_detail

// Merges consecutive cues until sentence-final punctuation closes a turn, and
// splits cues holding several sentences or dialogue dashes. Split pieces
// share the cue's time span in proportion to their token counts. Output turns
// carry the "unknown" speaker.
inline std::vector<SpeechTurn> segment_turns(const std::vector<CleanCue>& cues) {
  using namespace segment_detail;
  std::vector<SpeechTurn> turns;
  SpeechTurn open;
  bool has_open = false;

  auto close = [&] {
    if (has_open) turns.push_back(std::move(open));
    open = SpeechTurn{};
    has_open = false;
  };

  for (const auto& cue : cues) {
    const std::size_t n = cue.tokens.size();
    if (n == 0) continue;
    std::vector<std::size_t> bounds{0};
    for (std::size_t p : split_points(cue)) bounds.push_back(p);
    bounds.push_back(n);
    const double span = cue.end - cue.start;
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
      const std::size_t lo = bounds[b];
      const std::size_t hi = bounds[b + 1];
      const bool dash_start = std::find(cue.speaker_breaks.begin(), cue.speaker_breaks.end(), lo) != cue.speaker_breaks.end();
      if (b > 0 || dash_start) close();
      const double piece_start = round_ms(cue.start + span * static_cast<double>(lo) / static_cast<double>(n));
      const double piece_end = round_ms(cue.start + span * static_cast<double>(hi) / static_cast<double>(n));
      if (!has_open) {
        open.start = piece_start;
        has_open = true;
      }
      open.end = piece_end;
      for (std::size_t k = lo; k < hi; ++k) open.tokens.push_back(cue.tokens[k]);
    }
    if (closes_at_end(cue)) close();
  }
  close();
  return turns;
}

// Clear tokens of a subtitle file, markup removed, in reading order.
inline std::vector<Token> subtitle_tokens(const std::vector<SubtitleCue>& cues) {
  std::vector<Token> out;
  for (const auto& cue : cues) {
    for (auto& t : strip_markup(cue).tokens) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace scriptsync
