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

// Per-season corpus overview: recording duration, speech duration and
// ratio, speech turn and speaker counts.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scriptsync/core/model.hpp"

namespace scriptsync {

struct SeasonRow {
  // 0 for the series total.
  int season = 0;
  std::size_t episodes = 0;
  double video_duration = 0.0;
  double speech_duration = 0.0;
  std::size_t turns = 0;
  std::size_t speakers = 0;

  double speech_ratio() const { return video_duration > 0.0 ? speech_duration / video_duration : 0.0; }
};

struct SeriesOverview {
  std::string series;
  // Seasons ascending, then the total row.
  std::vector<SeasonRow> rows;
};

// `episodes` must all belong to one series.
inline SeriesOverview series_overview(const std::string& series, const std::vector<Episode>& episodes) {
  std::map<int, SeasonRow> rows;
  std::map<int, std::set<std::string>> speakers;
  SeasonRow total;
  std::set<std::string> all_speakers;
  for (const auto& e : episodes) {
    SeasonRow& r = rows[e.season];
    r.season = e.season;
    for (SeasonRow* row : {&r, &total}) {
      row->episodes += 1;
      row->video_duration += e.duration;
      row->turns += e.turns.size();
      for (const auto& t : e.turns) row->speech_duration += t.duration();
    }
    for (const auto& t : e.turns) {
      speakers[e.season].insert(t.speaker);
      all_speakers.insert(t.speaker);
    }
  }
  SeriesOverview out;
  out.series = series;
  for (auto& [season, r] : rows) {
    r.speakers = speakers[season].size();
    out.rows.push_back(r);
  }
  total.speakers = all_speakers.size();
  out.rows.push_back(total);
  return out;
}

// "HH:MM:SS", rounded to the second.
inline std::string format_hms(double seconds) {
  const auto s = static_cast<long long>(std::llround(std::max(0.0, seconds)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld", s / 3600, s / 60 % 60, s % 60);
  return buf;
}

inline std::string format_overview_table(const SeriesOverview& o) {
  std::string out = o.series + "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-7s %-16s %-16s %8s %9s\n", "Season", "Duration (#ep)", "Speech (%)",
                "# turns", "# speakers");
  out += line;
  for (const auto& r : o.rows) {
    const std::string label = r.season == 0 ? "Total" : std::to_string(r.season);
    const std::string video = format_hms(r.video_duration) + " (" + std::to_string(r.episodes) + ")";
    const std::string speech =
        format_hms(r.speech_duration) + " (" + std::to_string(std::llround(100.0 * r.speech_ratio())) + ")";
    std::snprintf(line, sizeof line, "%-7s %-16s %-16s %8zu %9zu\n", label.c_str(), video.c_str(), speech.c_str(),
                  r.turns, r.speakers);
    out += line;
  }
  return out;
}

}  // namespace scriptsync
