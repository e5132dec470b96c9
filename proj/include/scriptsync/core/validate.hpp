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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scriptsync/core/model.hpp"

namespace scriptsync {

enum class UnitKind { kEpisode, kTurn, kToken, kScene, kShot };

inline const char* to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::kEpisode: return "episode";
    case UnitKind::kTurn: return "turn";
    case UnitKind::kToken: return "token";
    case UnitKind::kScene: return "scene";
    case UnitKind::kShot: return "shot";
  }
  return "?";
}

struct Violation {
  UnitKind unit = UnitKind::kEpisode;
  std::size_t index = 0;
  // Second unit involved (overlap / ordering), or token position in a turn.
  std::size_t other = 0;
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::size_t count(std::string_view rule) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.rule == rule;
    return n;
  }
};

namespace detail {

inline bool is_hex_code(std::string_view s, int digits) {
  if (static_cast<int>(s.size()) != digits) return false;
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

template <typename Unit>
void check_intervals(const std::vector<Unit>& units, UnitKind kind, const std::string& prefix,
                     double duration, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto& u = units[i];
    if (u.start < 0.0) {
      out.push_back({kind, i, i, prefix + ".negative_start", "start time is negative"});
    }
    if (!(u.start < u.end)) {
      out.push_back({kind, i, i, prefix + ".time_order", "start must precede end"});
    }
    if (u.end > duration) {
      out.push_back({kind, i, i, prefix + ".exceeds_duration", "boundary exceeds episode duration"});
    }
    if (i > 0) {
      const auto& prev = units[i - 1];
      if (u.start < prev.start) {
        out.push_back({kind, i - 1, i, prefix + ".unsorted", "units not sorted by start"});
      } else if (prev.end > u.start) {
        out.push_back({kind, i - 1, i, prefix + ".overlap", "unit overlaps the next one"});
      }
    }
  }
}

}  // namespace detail

// Checks every structural invariant of the episode. Never throws on bad data.
inline ValidationReport validate_episode(const Episode& episode) {
  ValidationReport report;
  auto& out = report.violations;
  if (episode.season < 1) out.push_back({UnitKind::kEpisode, 0, 0, "episode.season", "season must be >= 1"});
  if (episode.episode < 1) out.push_back({UnitKind::kEpisode, 0, 0, "episode.number", "episode must be >= 1"});
  if (episode.encrypted && (episode.digits < 1 || episode.digits > 64)) {
    out.push_back({UnitKind::kEpisode, 0, 0, "episode.digits", "digits must be within [1, 64]"});
  }

  detail::check_intervals(episode.turns, UnitKind::kTurn, "turn", episode.duration, out);
  for (std::size_t i = 0; i < episode.turns.size(); ++i) {
    const auto& tokens = episode.turns[i].tokens;
    if (tokens.empty()) out.push_back({UnitKind::kTurn, i, i, "turn.empty_tokens", "turn has no tokens"});
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const Token& t = tokens[k];
      if (episode.encrypted) {
        if (!detail::is_hex_code(t.text, episode.digits)) {
          out.push_back({UnitKind::kToken, i, k, "token.code_format", "code is not a lowercase hex digest prefix"});
        }
      } else if (t.tag == TokenTag::kPlain || t.tag == TokenTag::kSubstituted) {
        if (t.text.empty()) {
          out.push_back({UnitKind::kToken, i, k, "token.empty", "token text is empty"});
        } else if (text::contains_space(t.text)) {
          out.push_back({UnitKind::kToken, i, k, "token.whitespace", "token contains whitespace"});
        }
      }
    }
  }

  if (episode.scenes) detail::check_intervals(*episode.scenes, UnitKind::kScene, "scene", episode.duration, out);
  if (episode.shots) {
    const auto& shots = *episode.shots;
    detail::check_intervals(shots, UnitKind::kShot, "shot", episode.duration, out);
    for (std::size_t i = 0; i < shots.size(); ++i) {
      if (shots[i].recurring_cluster && *shots[i].recurring_cluster < 0) {
        out.push_back({UnitKind::kShot, i, i, "shot.cluster_negative", "cluster label must be >= 0"});
      }
    }
  }
  return report;
}

// Cut-off rule for partially overlapping turns: the earlier turn ends where
// the next one starts. Turns left with non-positive duration are dropped.
// Input must be sorted by start.
inline std::vector<SpeechTurn> resolve_overlaps(std::vector<SpeechTurn> turns) {
  std::vector<SpeechTurn> out;
  out.reserve(turns.size());
  for (std::size_t i = 0; i < turns.size(); ++i) {
    SpeechTurn& turn = turns[i];
    if (i + 1 < turns.size() && turn.end > turns[i + 1].start) turn.end = turns[i + 1].start;
    if (turn.end > turn.start) out.push_back(std::move(turn));
  }
  return out;
}

}  // namespace scriptsync
