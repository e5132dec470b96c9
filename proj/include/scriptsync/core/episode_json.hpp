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

// Episode JSON schema (one document per episode):
//
//   {
//     "series": "BB", "season": 1, "episode": 3, "duration": 2839.52,
//     "encrypted": true, "digits": 3,          // "digits" only when encrypted
//     "turns": [
//       {"start": 12.04, "end": 13.9, "speaker": "Walter",
//        "addressees": ["Skyler"],             // optional; [] = soliloquy
//        "tokens": ["a3f", "09c", "5e1"]}
//     ],
//     "scenes": [{"start": 0.0, "end": 95.2}], // optional layer
//     "shots": [{"start": 0.0, "end": 4.1, "cluster": 7}]  // optional layer,
//                                              // "cluster" optional
//   }
//
// Recovered episodes use the same schema with clear tokens; recovery markers
// appear verbatim as "<>" and "<word>".

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "scriptsync/core/model.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

inline double get_number(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

inline int get_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

inline std::string get_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

inline const Json& get_array(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_array()) throw ParseError(where + ": field '" + key + "' must be an array");
  return v;
}

}  // namespace detail

inline Json to_json(const Episode& e) {
  Json j;
  j["series"] = e.series;
  j["season"] = e.season;
  j["episode"] = e.episode;
  j["duration"] = e.duration;
  j["encrypted"] = e.encrypted;
  if (e.encrypted) j["digits"] = e.digits;
  Json turns = Json::array();
  for (const auto& t : e.turns) {
    Json jt;
    jt["start"] = t.start;
    jt["end"] = t.end;
    jt["speaker"] = t.speaker;
    if (t.addressees) jt["addressees"] = *t.addressees;
    Json tokens = Json::array();
    for (const auto& tok : t.tokens) tokens.push_back(tok.render());
    jt["tokens"] = std::move(tokens);
    turns.push_back(std::move(jt));
  }
  j["turns"] = std::move(turns);
  if (e.scenes) {
    Json scenes = Json::array();
    for (const auto& s : *e.scenes) scenes.push_back({{"start", s.start}, {"end", s.end}});
    j["scenes"] = std::move(scenes);
  }
  if (e.shots) {
    Json shots = Json::array();
    for (const auto& s : *e.shots) {
      Json js{{"start", s.start}, {"end", s.end}};
      if (s.recurring_cluster) js["cluster"] = *s.recurring_cluster;
      shots.push_back(std::move(js));
    }
    j["shots"] = std::move(shots);
  }
  return j;
}

inline Episode episode_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) throw ParseError("episode document must be a JSON object");
  Episode e;
  e.series = get_string(j, "series", "episode");
  e.season = get_int(j, "season", "episode");
  e.episode = get_int(j, "episode", "episode");
  e.duration = get_number(j, "duration", "episode");
  if (auto it = j.find("encrypted"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("episode: field 'encrypted' must be a boolean");
    e.encrypted = it->get<bool>();
  }
  if (e.encrypted) e.digits = j.contains("digits") ? get_int(j, "digits", "episode") : 3;

  const Json& turns = get_array(j, "turns", "episode");
  e.turns.reserve(turns.size());
  for (std::size_t i = 0; i < turns.size(); ++i) {
    const Json& jt = turns[i];
    const std::string where = "turn " + std::to_string(i);
    if (!jt.is_object()) throw ParseError(where + ": must be an object");
    SpeechTurn t;
    t.start = get_number(jt, "start", where);
    t.end = get_number(jt, "end", where);
    t.speaker = jt.contains("speaker") ? get_string(jt, "speaker", where) : std::string(kUnknownSpeaker);
    if (auto it = jt.find("addressees"); it != jt.end() && !it->is_null()) {
      if (!it->is_array()) throw ParseError(where + ": 'addressees' must be an array");
      std::vector<std::string> addressees;
      for (const auto& a : *it) {
        if (!a.is_string()) throw ParseError(where + ": addressee must be a string");
        addressees.push_back(a.get<std::string>());
      }
      t.addressees = std::move(addressees);
    }
    const Json& tokens = get_array(jt, "tokens", where);
    t.tokens.reserve(tokens.size());
    for (const auto& tok : tokens) {
      if (!tok.is_string()) throw ParseError(where + ": token must be a string");
      t.tokens.push_back(e.encrypted ? Token::code(tok.get<std::string>()) : Token::parse(tok.get<std::string>()));
    }
    e.turns.push_back(std::move(t));
  }

  if (auto it = j.find("scenes"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("episode: 'scenes' must be an array");
    std::vector<Scene> scenes;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "scene " + std::to_string(i);
      scenes.push_back({get_number((*it)[i], "start", where), get_number((*it)[i], "end", where)});
    }
    e.scenes = std::move(scenes);
  }
  if (auto it = j.find("shots"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("episode: 'shots' must be an array");
    std::vector<Shot> shots;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "shot " + std::to_string(i);
      const Json& js = (*it)[i];
      Shot s{get_number(js, "start", where), get_number(js, "end", where), std::nullopt};
      if (auto c = js.find("cluster"); c != js.end() && !c->is_null()) {
        if (!c->is_number_integer()) throw ParseError(where + ": 'cluster' must be an integer");
        s.recurring_cluster = c->get<std::int64_t>();
      }
      shots.push_back(s);
    }
    e.shots = std::move(shots);
  }
  return e;
}

inline std::string dump_episode(const Episode& e) { return to_json(e).dump(1) + "\n"; }

inline Episode parse_episode(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return episode_from_json(j);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed: " + path.string());
}

inline Episode load_episode(const std::filesystem::path& path) {
  try {
    return parse_episode(read_file(path));
  } catch (const ParseError& ex) {
    throw ParseError(path.filename().string() + ": " + ex.what());
  }
}

inline void save_episode(const Episode& e, const std::filesystem::path& path) { write_file(path, dump_episode(e)); }

// Regular files in `dir` with the given extension, sorted by name.
inline std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir, std::string_view extension) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == extension) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

inline std::string episode_file_name(const Episode& e) { return e.id() + ".json"; }

}  // namespace scriptsync
