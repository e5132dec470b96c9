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

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

struct SpeakerProfile {
  std::string speaker;
  double speaking_time = 0.0;
  std::size_t turn_count = 0;
  // Fraction of the total speech time.
  double share = 0.0;
};

// Sorted by speaking time, descending; ties by label.
inline std::vector<SpeakerProfile> speaker_profiles(const std::vector<Episode>& episodes) {
  std::map<std::string, SpeakerProfile> acc;
  double total = 0.0;
  for (const auto& e : episodes) {
    for (const auto& t : e.turns) {
      auto& p = acc[t.speaker];
      p.speaker = t.speaker;
      p.speaking_time += t.duration();
      p.turn_count += 1;
      total += t.duration();
    }
  }
  std::vector<SpeakerProfile> out;
  out.reserve(acc.size());
  for (auto& [_, p] : acc) {
    p.share = total > 0.0 ? p.speaking_time / total : 0.0;
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const SpeakerProfile& a, const SpeakerProfile& b) {
    return a.speaking_time > b.speaking_time;
  });
  return out;
}

inline double top_k_share(const std::vector<SpeakerProfile>& profiles, std::size_t k) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(k, profiles.size()); ++i) s += profiles[i].share;
  return s;
}

// Pearson correlation; nullopt when either vector has zero variance.
inline std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct SeasonCorrelation {
  std::vector<int> seasons;
  std::vector<std::string> speakers;
  // Relative speaking time per season over `speakers`.
  std::vector<std::vector<double>> distributions;
  // Symmetric; nullopt marks an undefined coefficient.
  std::vector<std::vector<std::optional<double>>> r;
};

// Correlates per-season relative speaking-time vectors of one series over the
// union of its speakers (absent speaker -> 0).
inline SeasonCorrelation season_correlation(const std::vector<Episode>& episodes) {
  std::map<int, std::map<std::string, double>> per_season;
  std::map<std::string, bool> names;
  for (const auto& e : episodes) {
    auto& season = per_season[e.season];
    for (const auto& t : e.turns) {
      season[t.speaker] += t.duration();
      names[t.speaker] = true;
    }
  }
  if (per_season.size() < 2) throw Error("season correlation needs at least two seasons");

  SeasonCorrelation out;
  for (const auto& [name, _] : names) out.speakers.push_back(name);
  for (const auto& [season, times] : per_season) {
    out.seasons.push_back(season);
    double total = 0.0;
    for (const auto& [_, t] : times) total += t;
    std::vector<double> dist;
    dist.reserve(out.speakers.size());
    for (const auto& name : out.speakers) {
      auto it = times.find(name);
      dist.push_back(it == times.end() || total <= 0.0 ? 0.0 : it->second / total);
    }
    out.distributions.push_back(std::move(dist));
  }
  const std::size_t s = out.seasons.size();
  out.r.assign(s, std::vector<std::optional<double>>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      auto v = pearson(out.distributions[i], out.distributions[j]);
      if (i == j && v) v = 1.0;
      out.r[i][j] = v;
      out.r[j][i] = v;
    }
  }
  return out;
}

}  // namespace scriptsync
