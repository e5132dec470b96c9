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

// Corpus-level recovery: pair encrypted episodes with subtitle files and
// recover each one.

#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "scriptsync/align/recover.hpp"
#include "scriptsync/core/episode_json.hpp"
#include "scriptsync/subtitle/segment.hpp"
#include "scriptsync/subtitle/srt.hpp"
#include "scriptsync/util/parallel.hpp"

namespace scriptsync {

namespace fs = std::filesystem;

// (season, episode) parsed from an "SxxEyy" tag anywhere in a file name.
inline std::optional<std::pair<int, int>> parse_season_episode(const std::string& name) {
  static const std::regex pattern(R"([Ss](\d{1,2})[ ._-]?[Ee](\d{1,3}))");
  std::smatch m;
  if (!std::regex_search(name, m, pattern)) return std::nullopt;
  return std::make_pair(std::stoi(m[1].str()), std::stoi(m[2].str()));
}

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Pairing {
  // Episode id -> subtitle file.
  std::map<std::string, fs::path> matched;
  // Episode id -> reason.
  std::map<std::string, std::string> skipped;
};

// Pairs episodes with subtitle files. A manifest entry (episode id or
// "SxxEyy" -> path, relative paths resolved against `srt_dir`) wins over the
// file name convention. When several files carry the same SxxEyy tag, the one
// whose name contains the series id (case-insensitive) is chosen.
inline Pairing pair_subtitles(const std::vector<Episode>& episodes, const fs::path& srt_dir,
                              const std::map<std::string, std::string>& manifest = {}) {
  Pairing pairing;
  std::vector<fs::path> srt_files;
  if (fs::is_directory(srt_dir)) srt_files = list_files(srt_dir, ".srt");
  for (const auto& e : episodes) {
    const std::string id = e.id();
    auto entry = manifest.find(id);
    if (entry == manifest.end()) entry = manifest.find(e.season_episode());
    if (entry != manifest.end()) {
      fs::path p(entry->second);
      if (p.is_relative()) p = srt_dir / p;
      if (fs::is_regular_file(p)) {
        pairing.matched[id] = p;
      } else {
        pairing.skipped[id] = "manifest entry not found: " + p.string();
      }
      continue;
    }
    std::vector<fs::path> candidates;
    for (const auto& f : srt_files) {
      auto se = parse_season_episode(f.filename().string());
      if (se && se->first == e.season && se->second == e.episode) candidates.push_back(f);
    }
    if (candidates.size() > 1) {
      std::vector<fs::path> named;
      const std::string series = lowercase(e.series);
      for (const auto& f : candidates) {
        if (!series.empty() && lowercase(f.filename().string()).find(series) != std::string::npos) named.push_back(f);
      }
      candidates = std::move(named);
    }
    if (candidates.size() == 1) {
      pairing.matched[id] = candidates.front();
    } else if (candidates.empty()) {
      pairing.skipped[id] = "no subtitle file for " + e.season_episode();
    } else {
      pairing.skipped[id] = "ambiguous subtitle files for " + e.season_episode();
    }
  }
  return pairing;
}

// Reads a manifest: a JSON object of id -> subtitle path.
inline std::map<std::string, std::string> load_manifest(const fs::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& ex) {
    throw ParseError("manifest: " + std::string(ex.what()));
  }
  if (!j.is_object()) throw ParseError("manifest must be a JSON object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw ParseError("manifest: value for '" + it.key() + "' must be a string");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

inline std::vector<Token> load_subtitle_tokens(const fs::path& srt) { return subtitle_tokens(parse_srt(read_file(srt))); }

struct EpisodeRecovery {
  std::string id;
  Episode episode;
  RecoveryReport report;
  double seconds = 0.0;
};

struct CorpusRecovery {
  // Sorted by episode id.
  std::vector<EpisodeRecovery> recovered;
  std::map<std::string, std::string> skipped;
  double seconds = 0.0;

  bool complete() const { return skipped.empty(); }
};

// Recovers every paired episode on up to `threads` workers. Failures while
// reading or aligning a subtitle file mark that episode as skipped.
inline CorpusRecovery recover_corpus(const std::vector<Episode>& encrypted, const fs::path& srt_dir,
                                     const std::map<std::string, std::string>& manifest = {},
                                     unsigned threads = 1) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  CorpusRecovery out;
  const Pairing pairing = pair_subtitles(encrypted, srt_dir, manifest);
  out.skipped = pairing.skipped;

  std::vector<const Episode*> work;
  for (const auto& e : encrypted) {
    if (pairing.matched.count(e.id())) work.push_back(&e);
  }
  std::sort(work.begin(), work.end(), [](const Episode* x, const Episode* y) { return x->id() < y->id(); });

  std::vector<std::optional<EpisodeRecovery>> slots(work.size());
  std::vector<std::string> errors(work.size());
  parallel_for(work.size(), threads, [&](std::size_t i) {
    const Episode& e = *work[i];
    const auto start = Clock::now();
    try {
      const auto tokens = encrypt_subtitles(load_subtitle_tokens(pairing.matched.at(e.id())), e.digits);
      RecoveryResult r = recover_episode(e, tokens);
      slots[i] = EpisodeRecovery{e.id(), std::move(r.episode), r.report,
                                 std::chrono::duration<double>(Clock::now() - start).count()};
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (slots[i]) {
      out.recovered.push_back(std::move(*slots[i]));
    } else {
      out.skipped[work[i]->id()] = errors[i];
    }
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

}  // namespace scriptsync
