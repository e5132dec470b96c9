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

// Subcommands of the command-line tool. Each returns a process exit code:
// 0 success, 1 invalid input, 2 partial completion. Messages go to the given
// streams; files are written only below the output directory.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "scriptsync/align/corpus.hpp"
#include "scriptsync/cipher/cipher.hpp"
#include "scriptsync/core/episode_json.hpp"
#include "scriptsync/core/validate.hpp"
#include "scriptsync/eval/report.hpp"
#include "scriptsync/stats/distribution.hpp"
#include "scriptsync/stats/mtld.hpp"
#include "scriptsync/stats/network.hpp"
#include "scriptsync/stats/power_law.hpp"
#include "scriptsync/stats/scenes.hpp"
#include "scriptsync/stats/speakers.hpp"
#include "scriptsync/stats/tables.hpp"
#include "scriptsync/util/csv.hpp"

namespace scriptsync::cli {

namespace fs = std::filesystem;

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kPartial = 2 };

struct RunConfig {
  int digits = kDefaultDigits;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // json | csv | table; applies to what is printed on stdout.
  std::string format = "table";
  std::optional<fs::path> manifest;
  std::size_t bootstrap = 1000;
  bool weighted = false;
  double bin_width = 30.0;
  // Adds wall-clock seconds to the recovery summary; off by default so that
  // repeated runs write identical files.
  bool timing = false;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

struct Corpus {
  std::vector<Episode> episodes;  // sorted by id
  std::vector<fs::path> files;
};

// Loads and validates every *.json episode under `dir`. Throws Error with
// the offending file name.
inline Corpus load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  Corpus corpus;
  std::set<std::string> ids;
  std::vector<std::pair<Episode, fs::path>> loaded;
  for (const auto& path : list_files(dir, ".json")) {
    Episode e;
    try {
      e = load_episode(path);
    } catch (const Error& ex) {
      throw Error(path.filename().string() + ": " + ex.what());
    }
    const auto report = validate_episode(e);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      throw Error(path.filename().string() + ": " + std::to_string(report.violations.size()) +
                  " violation(s), first: " + v.rule + " at " + to_string(v.unit) + " " + std::to_string(v.index) +
                  " (" + v.message + ")");
    }
    if (!ids.insert(e.id()).second) throw Error(path.filename().string() + ": duplicate episode id " + e.id());
    loaded.emplace_back(std::move(e), path);
  }
  std::sort(loaded.begin(), loaded.end(),
            [](const auto& x, const auto& y) { return x.first.id() < y.first.id(); });
  for (auto& [e, p] : loaded) {
    corpus.episodes.push_back(std::move(e));
    corpus.files.push_back(std::move(p));
  }
  return corpus;
}

inline void check_distinct(const fs::path& input, const fs::path& output) {
  std::error_code ec;
  if (fs::exists(output) && fs::equivalent(input, output, ec)) {
    throw Error("output directory must differ from the input directory");
  }
}

inline std::string dump(const Json& j) { return j.dump(1) + "\n"; }

// Episodes grouped by series, each group sorted by id.
inline std::map<std::string, std::vector<Episode>> by_series(const std::vector<Episode>& episodes) {
  std::map<std::string, std::vector<Episode>> out;
  for (const auto& e : episodes) out[e.series].push_back(e);
  return out;
}

inline std::string safe_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    out += ok ? c : '_';
  }
  return out;
}

inline Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json("n/a"); }

}  // namespace detail

// Encrypts every clear episode of `in_dir` into `out_dir` under the same file
// names. Nothing is left behind when any episode is invalid.
inline int cmd_encrypt(const fs::path& in_dir, const fs::path& out_dir, const RunConfig& cfg, Streams io) {
  std::vector<std::pair<fs::path, Episode>> encrypted;
  try {
    check_digits(cfg.digits);
    detail::check_distinct(in_dir, out_dir);
    auto corpus = detail::load_corpus(in_dir);
    if (corpus.episodes.empty()) throw Error("no episode files in " + in_dir.string());
    for (std::size_t i = 0; i < corpus.episodes.size(); ++i) {
      try {
        encrypted.emplace_back(out_dir / corpus.files[i].filename(), encrypt_episode(corpus.episodes[i], cfg.digits));
      } catch (const Error& ex) {
        throw Error(corpus.files[i].filename().string() + ": " + ex.what());
      }
    }
  } catch (const Error& ex) {
    io.err << "encrypt: " << ex.what() << "\n";
    return kInvalidInput;
  }
  std::vector<fs::path> written;
  try {
    fs::create_directories(out_dir);
    for (const auto& [path, e] : encrypted) {
      save_episode(e, path);
      written.push_back(path);
    }
  } catch (const std::exception& ex) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    io.err << "encrypt: " << ex.what() << "; partial outputs removed\n";
    return kInvalidInput;
  }
  io.out << "encrypted " << encrypted.size() << " episode(s) with " << cfg.digits << "-digit codes\n";
  return kOk;
}

// Recovers clear text for every encrypted episode paired with a subtitle
// file, writing one JSON per episode plus summary.json.
inline int cmd_recover(const fs::path& enc_dir, const fs::path& srt_dir, const fs::path& out_dir, const RunConfig& cfg,
                       Streams io) {
  detail::Corpus corpus;
  std::map<std::string, std::string> manifest;
  try {
    detail::check_distinct(enc_dir, out_dir);
    corpus = detail::load_corpus(enc_dir);
    if (corpus.episodes.empty()) throw Error("no episode files in " + enc_dir.string());
    for (std::size_t i = 0; i < corpus.episodes.size(); ++i) {
      if (!corpus.episodes[i].encrypted) throw Error(corpus.files[i].filename().string() + ": episode is not encrypted");
    }
    if (cfg.manifest) manifest = load_manifest(*cfg.manifest);
  } catch (const Error& ex) {
    io.err << "recover: " << ex.what() << "\n";
    return kInvalidInput;
  }

  const CorpusRecovery result = recover_corpus(corpus.episodes, srt_dir, manifest, cfg.threads);
  Json summary;
  summary["recovered"] = result.recovered.size();
  summary["skipped"] = result.skipped.size();
  Json episodes = Json::array();
  RecoveryReport total;
  try {
    fs::create_directories(out_dir);
    for (const auto& r : result.recovered) {
      save_episode(r.episode, out_dir / episode_file_name(r.episode));
      Json j{{"id", r.id},
             {"reference_tokens", r.report.reference_tokens},
             {"subtitle_tokens", r.report.subtitle_tokens},
             {"matched", r.report.matched},
             {"deleted", r.report.deleted},
             {"substituted", r.report.substituted},
             {"discarded", r.report.discarded}};
      if (cfg.timing) j["seconds"] = r.seconds;
      episodes.push_back(std::move(j));
      total.reference_tokens += r.report.reference_tokens;
      total.deleted += r.report.deleted;
      total.substituted += r.report.substituted;
    }
    summary["episodes"] = std::move(episodes);
    Json skipped = Json::array();
    for (const auto& [id, reason] : result.skipped) skipped.push_back({{"id", id}, {"reason", reason}});
    summary["skipped_episodes"] = std::move(skipped);
    if (cfg.timing) summary["seconds"] = result.seconds;
    write_file(out_dir / "summary.json", detail::dump(summary));
  } catch (const std::exception& ex) {
    io.err << "recover: " << ex.what() << "\n";
    return kInvalidInput;
  }

  for (const auto& [id, reason] : result.skipped) io.err << "recover: skipped " << id << ": " << reason << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "recovered %zu of %zu episode(s): %zu tokens, %zu <>, %zu <word>\n",
                result.recovered.size(), corpus.episodes.size(), total.reference_tokens, total.deleted,
                total.substituted);
  io.out << line;
  std::snprintf(line, sizeof line, "recover: %.2f s\n", result.seconds);
  io.err << line;
  return result.complete() ? kOk : kPartial;
}

// Scores recovered episodes against the clear reference.
inline int cmd_eval(const fs::path& ref_dir, const fs::path& rec_dir, const std::optional<fs::path>& out_dir,
                    const RunConfig& cfg, Streams io) {
  std::vector<ErrorReport> reports;
  try {
    const auto ref = detail::load_corpus(ref_dir);
    const auto rec = detail::load_corpus(rec_dir);
    std::vector<std::string> ref_ids, rec_ids;
    for (const auto& e : ref.episodes) ref_ids.push_back(e.id());
    for (const auto& e : rec.episodes) rec_ids.push_back(e.id());
    if (ref_ids != rec_ids) {
      std::vector<std::string> only_ref, only_rec;
      std::set_difference(ref_ids.begin(), ref_ids.end(), rec_ids.begin(), rec_ids.end(), std::back_inserter(only_ref));
      std::set_difference(rec_ids.begin(), rec_ids.end(), ref_ids.begin(), ref_ids.end(), std::back_inserter(only_rec));
      std::string msg = "episode sets differ;";
      for (const auto& id : only_ref) msg += " missing recovery for " + id + ";";
      for (const auto& id : only_rec) msg += " no reference for " + id + ";";
      throw Error(msg);
    }
    if (ref_ids.empty()) throw Error("no episodes to evaluate");
    for (std::size_t i = 0; i < ref.episodes.size(); ++i) reports.push_back(episode_report(ref.episodes[i], rec.episodes[i]));
  } catch (const Error& ex) {
    io.err << "eval: " << ex.what() << "\n";
    return kInvalidInput;
  }

  const auto summary = summarize_by_series(reports);
  Json j;
  j["series"] = Json::array();
  for (const auto& s : summary) j["series"].push_back(to_json(s));
  j["episodes"] = Json::array();
  for (const auto& r : reports) j["episodes"].push_back(to_json(r));

  if (cfg.format == "json") {
    io.out << detail::dump(j);
  } else if (cfg.format == "csv") {
    io.out << "series,episodes,wer,ser,tokens,ins,del,sub\n";
    for (const auto& s : summary) {
      const Json r = to_json(s);
      io.out << csv::field(s.series) << "," << s.episodes;
      for (const char* k : {"wer", "ser", "tokens", "ins", "del", "sub"}) io.out << "," << csv::number(r[k].get<double>());
      io.out << "\n";
    }
  } else {
    io.out << format_error_table(summary);
  }
  if (out_dir) {
    try {
      fs::create_directories(*out_dir);
      write_file(*out_dir / "eval.json", detail::dump(j));
    } catch (const std::exception& ex) {
      io.err << "eval: " << ex.what() << "\n";
      return kInvalidInput;
    }
  }
  return kOk;
}

namespace detail {

inline void write_ccdf(const fs::path& path, std::span<const double> samples) {
  std::string text = "x,p\n";
  for (const auto& pt : ccdf(samples)) text += csv::number(pt.x) + "," + csv::number(pt.p) + "\n";
  write_file(path, text);
}

inline Json fit_json(std::span<const double> samples, const RunConfig& cfg) {
  try {
    const PowerLawFit f = fit_power_law_with_gof(samples, cfg.bootstrap, cfg.seed, cfg.threads);
    Json j{{"alpha", f.alpha}, {"x_min", f.x_min}, {"ks", f.ks}, {"n_tail", f.n_tail}, {"n", f.n}};
    j["p_value"] = optional_number(f.p_value);
    j["bootstrap_reps"] = f.bootstrap_reps;
    if (!f.warning.empty()) j["warning"] = f.warning;
    return j;
  } catch (const Error& ex) {
    return Json{{"status", "n/a"}, {"reason", ex.what()}};
  }
}

inline std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace detail

// Corpus statistics per series. Writes stats.json and CSV exports when
// `out_dir` is given; prints the overview tables.
inline int cmd_stats(const fs::path& dir, const std::optional<fs::path>& out_dir, const RunConfig& cfg, Streams io) {
  detail::Corpus corpus;
  try {
    if (out_dir) detail::check_distinct(dir, *out_dir);
    corpus = detail::load_corpus(dir);
    if (corpus.episodes.empty()) throw Error("no episode files in " + dir.string());
    for (std::size_t i = 0; i < corpus.episodes.size(); ++i) {
      if (corpus.episodes[i].encrypted) {
        throw Error(corpus.files[i].filename().string() + ": statistics need clear or recovered text");
      }
    }
    if (out_dir) fs::create_directories(*out_dir);
  } catch (const std::exception& ex) {
    io.err << "stats: " << ex.what() << "\n";
    return kInvalidInput;
  }

  Json all = Json::object();
  std::string tables;
  try {
    for (const auto& [series, episodes] : detail::by_series(corpus.episodes)) {
      const std::string stem = detail::safe_name(series);
      Json j;
      const SeriesOverview overview = series_overview(series, episodes);
      tables += format_overview_table(overview);

      Json seasons = Json::array();
      for (const auto& r : overview.rows) {
        seasons.push_back({{"season", r.season == 0 ? Json("total") : Json(r.season)},
                           {"episodes", r.episodes},
                           {"video_duration", r.video_duration},
                           {"speech_duration", r.speech_duration},
                           {"speech_ratio", r.speech_ratio()},
                           {"turns", r.turns},
                           {"speakers", r.speakers}});
      }
      j["overview"] = std::move(seasons);

      std::vector<double> durations;
      std::vector<Token> tokens;
      std::set<std::string> types;
      std::size_t words = 0;
      for (const auto& e : episodes) {
        for (const auto& t : e.turns) {
          durations.push_back(t.duration());
          for (const auto& tok : t.tokens) {
            tokens.push_back(tok);
            if (!tok.is_punctuation() && tok.tag != TokenTag::kDeleted) {
              ++words;
              types.insert(text::fold_case(tok.text));
            }
          }
        }
      }
      j["tokens"] = tokens.size();
      j["words"] = words;
      j["types"] = types.size();
      const auto vocab = mtld_vocabulary(tokens);
      std::optional<double> mtld_value;
      if (vocab.size() >= kMtldMinWords) {
        try {
          mtld_value = mtld_words(vocab);
        } catch (const Error&) {
        }
      }
      j["mtld"] = detail::optional_number(mtld_value);

      const auto profiles = speaker_profiles(episodes);
      std::vector<double> speaking;
      for (const auto& p : profiles) speaking.push_back(p.speaking_time);
      if (durations.empty()) {
        j["turn_durations"] = "n/a";
      } else {
        const DurationStats ds = duration_stats(durations);
        j["turn_durations"] = {{"count", ds.count}, {"median", ds.median}, {"mean", ds.mean},
                               {"power_law", detail::fit_json(durations, cfg)}};
        Json top = Json::object();
        for (std::size_t k : {1, 5, 10}) top[std::to_string(k)] = top_k_share(profiles, k);
        j["speaking_time"] = {{"speakers", profiles.size()}, {"top_k_share", top},
                              {"power_law", detail::fit_json(speaking, cfg)}};
        if (out_dir) {
          detail::write_ccdf(*out_dir / ("ccdf_turn_durations_" + stem + ".csv"), durations);
          detail::write_ccdf(*out_dir / ("ccdf_speaking_time_" + stem + ".csv"), speaking);
        }
      }
      Json speakers = Json::array();
      for (const auto& p : profiles) {
        speakers.push_back({{"speaker", p.speaker}, {"speaking_time", p.speaking_time},
                            {"turns", p.turn_count}, {"share", p.share}});
      }
      j["speakers"] = std::move(speakers);

      std::set<int> season_set;
      for (const auto& e : episodes) season_set.insert(e.season);
      if (season_set.size() < 2) {
        j["season_correlation"] = "n/a";
      } else {
        const auto c = season_correlation(episodes);
        Json m = Json::array();
        std::string text = "season";
        for (int s : c.seasons) text += "," + std::to_string(s);
        text += "\n";
        for (std::size_t a = 0; a < c.seasons.size(); ++a) {
          Json row = Json::array();
          text += std::to_string(c.seasons[a]);
          for (std::size_t b = 0; b < c.seasons.size(); ++b) {
            row.push_back(detail::optional_number(c.r[a][b]));
            text += "," + (c.r[a][b] ? csv::number(*c.r[a][b]) : std::string("n/a"));
          }
          text += "\n";
          m.push_back(std::move(row));
        }
        j["season_correlation"] = {{"seasons", c.seasons}, {"r", std::move(m)}};
        if (out_dir) write_file(*out_dir / ("season_correlation_" + stem + ".csv"), text);
      }

      const SceneShotStats ss = scene_shot_stats(episodes, cfg.bin_width);
      if (ss.scenes) {
        const auto& sc = *ss.scenes;
        double speakers_sum = 0.0;
        std::size_t silent = 0;
        for (auto k : sc.speakers_per_scene) {
          speakers_sum += static_cast<double>(k);
          silent += k == 0;
        }
        j["scenes"] = {{"count", sc.count},
                       {"mean_duration", sc.mean_duration},
                       {"mean_speakers", sc.count ? speakers_sum / static_cast<double>(sc.count) : 0.0},
                       {"without_speakers", silent},
                       {"histogram_bin_width", sc.bin_width}};
        if (out_dir) {
          std::string text = "speakers,duration_bin_start,duration_bin_end,scenes\n";
          for (const auto& [key, count] : sc.histogram) {
            text += std::to_string(key.first) + "," + csv::number(static_cast<double>(key.second) * sc.bin_width) + "," +
                    csv::number(static_cast<double>(key.second + 1) * sc.bin_width) + "," + std::to_string(count) + "\n";
          }
          write_file(*out_dir / ("scene_histogram_" + stem + ".csv"), text);
        }
      } else {
        j["scenes"] = "n/a";
      }
      if (ss.shots) {
        j["shots"] = {{"count", ss.shots->count},
                      {"mean_duration", ss.shots->mean_duration},
                      {"recurring_clusters", ss.shots->clusters},
                      {"mean_occurrences", detail::optional_number(ss.shots->mean_occurrences)}};
      } else {
        j["shots"] = "n/a";
      }

      tables += "  median turn " + (durations.empty() ? std::string("n/a") : detail::fmt("%.1f s", duration_stats(durations).median)) +
                ", MTLD " + (mtld_value ? detail::fmt("%.1f", *mtld_value) : std::string("n/a")) + ", top-5 speakers " +
                detail::fmt("%.1f%%", 100.0 * top_k_share(profiles, 5)) + ", scenes " +
                (ss.scenes ? std::to_string(ss.scenes->count) : std::string("n/a")) + ", shots " +
                (ss.shots ? std::to_string(ss.shots->count) : std::string("n/a")) + "\n\n";
      all[series] = std::move(j);
    }
    if (out_dir) write_file(*out_dir / "stats.json", detail::dump(all));
  } catch (const std::exception& ex) {
    io.err << "stats: " << ex.what() << "\n";
    return kInvalidInput;
  }
  io.out << (cfg.format == "json" ? detail::dump(all) : tables);
  return kOk;
}

// Conversational network of the corpus from addressee annotations.
inline int cmd_network(const fs::path& dir, const std::optional<fs::path>& out_dir, const RunConfig& cfg, Streams io) {
  ConversationalNetwork net;
  try {
    if (out_dir) detail::check_distinct(dir, *out_dir);
    const auto corpus = detail::load_corpus(dir);
    if (corpus.episodes.empty()) throw Error("no episode files in " + dir.string());
    bool annotated = false;
    for (const auto& e : corpus.episodes)
      for (const auto& t : e.turns) annotated = annotated || t.addressees.has_value();
    if (!annotated) throw Error("no turn carries an addressee annotation; the network is undefined");
    net = build_network(corpus.episodes);
    if (net.edges.empty()) throw Error("addressee annotations name no interlocutors (soliloquies only); the network is empty");
  } catch (const Error& ex) {
    io.err << "network: " << ex.what() << "\n";
    return kInvalidInput;
  }
  const auto c = centralities(net, cfg.weighted);
  std::string table = "speaker,degree,weighted_degree,betweenness\n";
  for (const auto& v : c) {
    table += csv::field(v.name) + "," + std::to_string(v.degree) + "," + std::to_string(v.weighted_degree) + "," +
             csv::number(v.betweenness) + "\n";
  }
  if (out_dir) {
    try {
      fs::create_directories(*out_dir);
      write_file(*out_dir / "edges.csv", edge_list_csv(net));
      write_file(*out_dir / "network.graphml", to_graphml(net, c));
      write_file(*out_dir / "centralities.csv", table);
    } catch (const std::exception& ex) {
      io.err << "network: " << ex.what() << "\n";
      return kInvalidInput;
    }
  }
  if (cfg.format == "csv") {
    io.out << table;
  } else if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& v : c) {
      j.push_back({{"speaker", v.name}, {"degree", v.degree}, {"weighted_degree", v.weighted_degree},
                   {"betweenness", v.betweenness}});
    }
    io.out << detail::dump(j);
  } else {
    std::vector<VertexCentrality> sorted(c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.betweenness > y.betweenness; });
    char line[256];
    std::snprintf(line, sizeof line, "%zu speakers, %zu edges\n%-24s %7s %9s %12s\n", net.vertices.size(),
                  net.edges.size(), "Speaker", "Degree", "Weighted", "Betweenness");
    io.out << line;
    for (const auto& v : sorted) {
      std::snprintf(line, sizeof line, "%-24s %7zu %9zu %12.2f\n", v.name.c_str(), v.degree, v.weighted_degree,
                    v.betweenness);
      io.out << line;
    }
  }
  return kOk;
}

}  // namespace scriptsync::cli
