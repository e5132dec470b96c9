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

// Word and sentence error rates of recovered episodes against references.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "scriptsync/core/episode_json.hpp"
#include "scriptsync/core/model.hpp"
#include "scriptsync/eval/word_errors.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

struct ErrorReport {
  std::string id;
  // Punctuation-stripped reference tokens.
  std::size_t tokens = 0;
  std::size_t ins = 0;
  std::size_t del = 0;
  std::size_t sub = 0;
  std::size_t turns = 0;
  std::size_t erroneous_turns = 0;
  double wer = 0.0;
  double ser = 0.0;
};

// Hypothesis tokens of a recovered turn: "<>" contributes nothing, "<word>"
// contributes "word". Punctuation is removed.
inline std::vector<Token> hypothesis_tokens(const std::vector<Token>& recovered) {
  std::vector<Token> out;
  out.reserve(recovered.size());
  for (const auto& t : recovered) {
    if (t.tag == TokenTag::kDeleted || t.is_punctuation()) continue;
    out.push_back(Token::word(t.text));
  }
  return out;
}

inline ErrorReport episode_report(const Episode& reference, const Episode& recovered) {
  if (reference.encrypted || recovered.encrypted) throw Error(reference.id() + ": cannot score encrypted text");
  if (reference.turns.size() != recovered.turns.size()) {
    throw Error(reference.id() + ": turn count mismatch (" + std::to_string(reference.turns.size()) + " vs " +
                std::to_string(recovered.turns.size()) + ")");
  }
  ErrorReport r;
  r.id = reference.id();
  r.turns = reference.turns.size();
  std::vector<Token> ref_all, hyp_all;
  for (std::size_t i = 0; i < reference.turns.size(); ++i) {
    auto ref = strip_punctuation(reference.turns[i].tokens);
    auto hyp = hypothesis_tokens(recovered.turns[i].tokens);
    const bool same = ref.size() == hyp.size() &&
                      std::equal(ref.begin(), ref.end(), hyp.begin(),
                                 [](const Token& x, const Token& y) { return x.text == y.text; });
    r.erroneous_turns += !same;
    for (auto& t : ref) ref_all.push_back(std::move(t));
    for (auto& t : hyp) hyp_all.push_back(std::move(t));
  }
  const WordErrors e = word_errors(ref_all, hyp_all);
  r.tokens = ref_all.size();
  r.ins = e.ins;
  r.del = e.del;
  r.sub = e.sub;
  r.wer = r.tokens ? static_cast<double>(e.total()) / static_cast<double>(r.tokens) : (e.total() ? 1.0 : 0.0);
  r.ser = r.turns ? static_cast<double>(r.erroneous_turns) / static_cast<double>(r.turns) : 0.0;
  return r;
}

// Per-episode averages for one series, in the layout of the published
// recovery table: WER and SER in percent, then mean tokens / Ins / Del / Sub.
struct SeriesSummary {
  std::string series;
  std::size_t episodes = 0;
  double wer_percent = 0.0;
  double ser_percent = 0.0;
  double tokens = 0.0;
  double ins = 0.0;
  double del = 0.0;
  double sub = 0.0;
};

// `reports` keyed by episode id ("SERIES.SxxEyy").
inline std::vector<SeriesSummary> summarize_by_series(const std::vector<ErrorReport>& reports) {
  std::map<std::string, std::vector<const ErrorReport*>> groups;
  for (const auto& r : reports) groups[r.id.substr(0, r.id.rfind('.'))].push_back(&r);
  std::vector<SeriesSummary> out;
  for (const auto& [series, rs] : groups) {
    SeriesSummary s;
    s.series = series;
    s.episodes = rs.size();
    for (const ErrorReport* r : rs) {
      s.wer_percent += 100.0 * r->wer;
      s.ser_percent += 100.0 * r->ser;
      s.tokens += static_cast<double>(r->tokens);
      s.ins += static_cast<double>(r->ins);
      s.del += static_cast<double>(r->del);
      s.sub += static_cast<double>(r->sub);
    }
    const double n = static_cast<double>(rs.size());
    s.wer_percent /= n;
    s.ser_percent /= n;
    s.tokens /= n;
    s.ins /= n;
    s.del /= n;
    s.sub /= n;
    out.push_back(s);
  }
  return out;
}

inline std::string format_error_table(const std::vector<SeriesSummary>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %6s %6s %10s %6s %7s %6s\n", "Show", "WER", "SER", "# tokens", "Ins",
                "Del", "Sub");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-12s %6.1f %6.1f %10.1f %6.1f %7.1f %6.1f\n", r.series.c_str(), r.wer_percent,
                  r.ser_percent, r.tokens, r.ins, r.del, r.sub);
    out += line;
  }
  return out;
}

inline Json to_json(const ErrorReport& r) {
  return Json{{"id", r.id},   {"tokens", r.tokens}, {"ins", r.ins},
              {"del", r.del}, {"sub", r.sub},       {"turns", r.turns},
              {"erroneous_turns", r.erroneous_turns}, {"wer", r.wer}, {"ser", r.ser}};
}

// Percentages and averages rounded to one decimal.
inline Json to_json(const SeriesSummary& s) {
  auto r1 = [](double x) { return std::round(x * 10.0) / 10.0; };
  return Json{{"series", s.series},    {"episodes", s.episodes}, {"wer", r1(s.wer_percent)},
              {"ser", r1(s.ser_percent)}, {"tokens", r1(s.tokens)}, {"ins", r1(s.ins)},
              {"del", r1(s.del)},       {"sub", r1(s.sub)}};
}

}  // namespace scriptsync
