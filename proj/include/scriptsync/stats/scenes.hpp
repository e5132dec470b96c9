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

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

struct SceneSummary {
  std::size_t count = 0;
  double mean_duration = 0.0;
  // One entry per scene, in corpus order.
  std::vector<std::size_t> speakers_per_scene;
  std::vector<double> durations;
  // (speaker count, duration bin index) -> scenes.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> histogram;
  double bin_width = 0.0;
};

struct ShotSummary {
  std::size_t count = 0;
  double mean_duration = 0.0;
  std::size_t clusters = 0;
  // Labeled shots per distinct (episode, cluster label); nullopt without labels.
  std::optional<double> mean_occurrences;
};

struct SceneShotStats {
  // nullopt when no episode carries the layer.
  std::optional<SceneSummary> scenes;
  std::optional<ShotSummary> shots;
};

// Distinct speakers whose turn midpoint lies in [start, end).
inline std::size_t speakers_in(const std::vector<SpeechTurn>& turns, double start, double end) {
  std::set<std::string> names;
  for (const auto& t : turns) {
    const double mid = 0.5 * (t.start + t.end);
    if (mid >= start && mid < end) names.insert(t.speaker);
  }
  return names.size();
}

inline SceneShotStats scene_shot_stats(const std::vector<Episode>& episodes, double bin_width = 30.0) {
  if (!(bin_width > 0.0)) throw Error("histogram bin width must be positive");
  SceneShotStats out;
  for (const auto& e : episodes) {
    if (!e.scenes) continue;
    if (!out.scenes) {
      out.scenes.emplace();
      out.scenes->bin_width = bin_width;
    }
    for (const auto& s : *e.scenes) {
      const std::size_t speakers = speakers_in(e.turns, s.start, s.end);
      out.scenes->speakers_per_scene.push_back(speakers);
      out.scenes->durations.push_back(s.duration());
      const auto bin = static_cast<std::size_t>(std::floor(std::max(0.0, s.duration()) / bin_width));
      out.scenes->histogram[{speakers, bin}] += 1;
    }
  }
  if (out.scenes) {
    auto& sc = *out.scenes;
    sc.count = sc.durations.size();
    double sum = 0.0;
    for (double d : sc.durations) sum += d;
    sc.mean_duration = sc.count ? sum / static_cast<double>(sc.count) : 0.0;
  }

  std::map<std::pair<std::string, std::int64_t>, std::size_t> cluster_sizes;
  std::size_t labeled = 0;
  double shot_time = 0.0;
  for (const auto& e : episodes) {
    if (!e.shots) continue;
    if (!out.shots) out.shots.emplace();
    for (const auto& s : *e.shots) {
      out.shots->count += 1;
      shot_time += s.duration();
      if (s.recurring_cluster) {
        cluster_sizes[{e.id(), *s.recurring_cluster}] += 1;
        ++labeled;
      }
    }
  }
  if (out.shots) {
    auto& sh = *out.shots;
    sh.mean_duration = sh.count ? shot_time / static_cast<double>(sh.count) : 0.0;
    sh.clusters = cluster_sizes.size();
    if (!cluster_sizes.empty()) sh.mean_occurrences = static_cast<double>(labeled) / static_cast<double>(sh.clusters);
  }
  return out;
}

}  // namespace scriptsync
