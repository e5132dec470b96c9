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
#include <numeric>
#include <span>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

// Fraction of the episode covered by (non-overlapping) speech turns.
inline double speech_coverage(const Episode& episode) {
  if (!(episode.duration > 0.0)) throw Error(episode.id() + ": episode duration must be positive");
  double speech = 0.0;
  for (const auto& t : episode.turns) speech += t.duration();
  return speech / episode.duration;
}

struct DurationStats {
  double median = 0.0;
  double mean = 0.0;
  std::size_t count = 0;
};

inline DurationStats duration_stats(std::span<const double> values) {
  if (values.empty()) throw Error("duration statistics need at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  DurationStats s;
  s.count = n;
  s.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  return s;
}

inline std::vector<double> turn_durations(const std::vector<SpeechTurn>& turns) {
  std::vector<double> out;
  out.reserve(turns.size());
  for (const auto& t : turns) out.push_back(t.duration());
  return out;
}

struct CcdfPoint {
  double x = 0.0;
  // P(X >= x)
  double p = 0.0;

  friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

// Empirical complementary CDF, one point per distinct value.
inline std::vector<CcdfPoint> ccdf(std::span<const double> samples) {
  if (samples.empty()) throw Error("CCDF of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CcdfPoint> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    out.push_back({sorted[i], static_cast<double>(sorted.size() - i) / n});
  }
  return out;
}

}  // namespace scriptsync
