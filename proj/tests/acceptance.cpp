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

// Acceptance suite. Prints one PASS/FAIL line per criterion (SKIP for the
// gated real-data check) and exits non-zero when any criterion fails.
//
//   acceptance [--cli PATH]
//
// --cli enables the checks that run the command-line tool as a subprocess.
// SCRIPTSYNC_REAL_DATA=DIR with DIR/clear/*.json and DIR/srt/*.srt (and an
// optional DIR/manifest.json) enables the comparison against the published
// recovery error rates.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "scriptsync/scriptsync.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace {

using namespace scriptsync;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kRoundTripSecondsPer10 = 1.0;
constexpr double kDelTolerance = 0.10;
constexpr double kSubTolerance = 0.15;
constexpr double kThroughputSeconds = 10.0;
constexpr double kAlphaTolerance = 0.1;
constexpr double kExponentialMaxP = 0.1;
constexpr double kPowerLawSeconds = 30.0;
constexpr double kMtldOracleTolerance = 1e-12;
constexpr double kMtldConcatTolerance = 0.05;
constexpr double kBetweennessTolerance = 1e-9;
// Published per-series recovery error rates (percent) and the allowed gap.
constexpr double kRealWerTolerance = 0.5;
constexpr double kRealSerTolerance = 1.5;

struct Outcome {
  enum Status { kPass, kFail, kSkip } status;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

unsigned hardware_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("scriptsync_acc_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) out[fs::relative(entry.path(), dir).string()] = read_file(entry.path());
  }
  return out;
}

std::vector<SubtitleToken> subtitle_codes(const std::string& srt, int digits) {
  return encrypt_subtitles(subtitle_tokens(parse_srt(srt)), digits);
}

// --- round trip

Outcome round_trip() {
  Rng rng(101);
  double recover_seconds = 0.0;
  std::size_t failures = 0, tokens = 0, colliding_types = 0;
  for (int i = 0; i < 50; ++i) {
    const auto vocab = testing::make_vocabulary(rng, 2000 + rng.below(8001));
    const std::size_t n = 500 + rng.below(5501);
    const Episode clear = testing::synthetic_episode(rng, vocab, {"RT", 1, i + 1, n, 8, false, false, false});
    const Episode enc = encrypt_episode(clear);
    const std::string srt = testing::write_srt(clear);

    std::map<std::string, std::set<std::string>> by_code;
    for (const auto& t : testing::episode_tokens(clear)) by_code[encrypt_token(t.text).value()].insert(t.text);
    for (const auto& [code, words] : by_code) colliding_types += words.size() > 1 ? words.size() : 0;

    const auto t0 = Clock::now();
    const RecoveryResult r = recover_episode(enc, subtitle_codes(srt, kDefaultDigits));
    recover_seconds += seconds_since(t0);
    const ErrorReport e = episode_report(clear, r.episode);
    tokens += clear.token_count();
    failures += e.wer != 0.0 || e.ser != 0.0;
  }
  const double per10 = recover_seconds / 5.0;
  const bool ok = failures == 0 && per10 <= kRoundTripSecondsPer10;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("%zu/50 episodes with WER or SER > 0; %zu tokens; %zu word types share a code with another; "
              "%.3f s per 10 episodes (limit %.1f)",
              failures, tokens, colliding_types, per10, kRoundTripSecondsPer10)};
}

// --- perturbation

struct Regime {
  double del_percent;
  double sub_percent;
};

constexpr Regime kRegimes[] = {{0.5, 0.05}, {0.5, 0.2}, {1.5, 0.05}, {1.5, 0.2}, {3.0, 0.05}, {3.0, 0.2}};

struct PerturbedCorpus {
  std::vector<Episode> clear;
  std::vector<std::string> srt;
  std::size_t injected_del = 0;
  std::size_t injected_sub = 0;
};

PerturbedCorpus perturbed_corpus(std::uint64_t seed, const Regime& regime, int episodes, std::size_t tokens) {
  Rng rng(seed);
  const auto vocab = testing::make_vocabulary(rng, 5000);
  PerturbedCorpus c;
  for (int i = 0; i < episodes; ++i) {
    Episode e = testing::synthetic_episode(rng, vocab, {"PT", 1 + i / 10, 1 + i % 10, tokens, 8, true, false, false});
    testing::Perturbation applied;
    const Episode noisy = testing::perturb_episode(rng, e, regime.del_percent / 100.0, regime.sub_percent / 100.0, applied);
    c.injected_del += applied.deleted;
    c.injected_sub += applied.substituted;
    c.srt.push_back(testing::write_srt(noisy));
    c.clear.push_back(std::move(e));
  }
  return c;
}

std::vector<ErrorReport> recover_and_score(const PerturbedCorpus& c, int digits) {
  std::vector<ErrorReport> out;
  for (std::size_t i = 0; i < c.clear.size(); ++i) {
    const RecoveryResult r = recover_episode(encrypt_episode(c.clear[i], digits), subtitle_codes(c.srt[i], digits));
    out.push_back(episode_report(c.clear[i], r.episode));
  }
  return out;
}

Outcome perturbation() {
  std::string detail;
  bool ok = true;
  std::uint64_t seed = 200;
  for (const auto& regime : kRegimes) {
    const auto corpus = perturbed_corpus(seed++, regime, 20, 3700);
    std::size_t del = 0, sub = 0, ins = 0;
    for (const auto& r : recover_and_score(corpus, kDefaultDigits)) {
      del += r.del;
      sub += r.sub;
      ins += r.ins;
    }
    const double del_gap = std::abs(static_cast<double>(del) - static_cast<double>(corpus.injected_del)) /
                           static_cast<double>(corpus.injected_del);
    const double sub_gap = std::abs(static_cast<double>(sub) - static_cast<double>(corpus.injected_sub)) /
                           static_cast<double>(corpus.injected_sub);
    const bool good = del_gap <= kDelTolerance && sub_gap <= kSubTolerance;
    ok = ok && good;
    detail += fmt("%sd=%.1f%% s=%.2f%%: Del %zu/%zu, Sub %zu/%zu, Ins %zu%s", detail.empty() ? "" : "; ",
                  regime.del_percent, regime.sub_percent, del, corpus.injected_del, sub, corpus.injected_sub, ins,
                  good ? "" : " (out of tolerance)");
  }
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

// --- truncation

int run(const std::string& command) { return std::system(command.c_str()); }

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome truncation(const std::string& cli) {
  std::size_t differing = 0, episodes = 0;
  std::uint64_t seed = 200;
  for (const auto& regime : kRegimes) {
    const auto corpus = perturbed_corpus(seed++, regime, 20, 3700);
    const auto short_codes = recover_and_score(corpus, 3);
    const auto full_codes = recover_and_score(corpus, 64);
    for (std::size_t i = 0; i < short_codes.size(); ++i) {
      ++episodes;
      differing += to_json(short_codes[i]) != to_json(full_codes[i]);
    }
  }
  std::string detail = fmt("%zu/%zu episode reports differ between 3 and 64 digits", differing, episodes);
  bool ok = differing == 0;

  if (!cli.empty()) {
    TempDir tmp("trunc");
    const auto corpus = perturbed_corpus(203, kRegimes[3], 6, 3700);
    fs::create_directories(tmp.path() / "clear");
    fs::create_directories(tmp.path() / "srt");
    for (std::size_t i = 0; i < corpus.clear.size(); ++i) {
      save_episode(corpus.clear[i], tmp.path() / "clear" / episode_file_name(corpus.clear[i]));
      write_file(tmp.path() / "srt" / (corpus.clear[i].id() + ".srt"), corpus.srt[i]);
    }
    std::map<int, std::string> reports;
    for (int digits : {3, 64}) {
      const fs::path d = tmp.path() / std::to_string(digits);
      const std::string quiet = " > /dev/null 2>&1";
      const bool ran =
          run(cli + " encrypt " + q(tmp.path() / "clear") + " --out " + q(d / "enc") + " --digits " +
              std::to_string(digits) + quiet) == 0 &&
          run(cli + " recover " + q(d / "enc") + " " + q(tmp.path() / "srt") + " --out " + q(d / "rec") + quiet) == 0 &&
          (fs::remove(d / "rec" / "summary.json"), true) &&
          run(cli + " eval " + q(tmp.path() / "clear") + " " + q(d / "rec") + " --out " + q(d / "eval") + quiet) == 0;
      reports[digits] = ran ? read_file(d / "eval" / "eval.json") : std::string();
    }
    const bool same = !reports[3].empty() && reports[3] == reports[64];
    ok = ok && same;
    detail += same ? "; CLI eval.json identical for --digits 3 and 64" : "; CLI eval.json differs or a command failed";
  }
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

// --- throughput

Outcome throughput() {
  TempDir tmp("throughput");
  Rng rng(300);
  const auto vocab = testing::make_vocabulary(rng, 6000);
  fs::create_directories(tmp.path() / "enc");
  fs::create_directories(tmp.path() / "srt");
  std::size_t tokens = 0;
  for (int i = 0; i < 73; ++i) {
    const Episode e = testing::synthetic_episode(rng, vocab, {"TP", 1 + i / 10, 1 + i % 10, 4350, 10, true, false, false});
    testing::Perturbation applied;
    const Episode noisy = testing::perturb_episode(rng, e, 0.003, 0.0005, applied);
    tokens += e.token_count();
    const Episode enc = encrypt_episode(e);
    save_episode(enc, tmp.path() / "enc" / episode_file_name(enc));
    write_file(tmp.path() / "srt" / (e.id() + ".srt"), testing::write_srt(noisy));
  }
  const auto t0 = Clock::now();
  std::vector<Episode> encrypted;
  for (const auto& f : list_files(tmp.path() / "enc", ".json")) encrypted.push_back(load_episode(f));
  const CorpusRecovery r = recover_corpus(encrypted, tmp.path() / "srt", {}, 1);
  const double s = seconds_since(t0);
  const bool ok = r.recovered.size() == 73 && r.complete() && s <= kThroughputSeconds;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("%zu/73 episodes (%zu tokens, avg %.0f) read and recovered in %.2f s on 1 thread (limit %.0f s)",
              r.recovered.size(), tokens, static_cast<double>(tokens) / 73.0, s, kThroughputSeconds)};
}

// --- power law

Outcome power_law() {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  std::uint64_t seed = 20261;
  for (double alpha : {2.0, 2.5, 3.0}) {
    Rng rng(seed++);
    std::vector<double> x(10000);
    for (auto& v : x) v = sample_power_law(rng, alpha, 1.0);
    const PowerLawFit f = fit_power_law(x);
    const bool good = std::abs(f.alpha - alpha) <= kAlphaTolerance;
    ok = ok && good;
    detail += fmt("alpha %.1f -> %.3f (x_min %.3f)%s; ", alpha, f.alpha, f.x_min, good ? "" : " out of tolerance");
  }
  Rng rng(seed);
  std::vector<double> x(10000);
  for (auto& v : x) v = rng.exponential(1.0);
  const PowerLawFit f = fit_power_law_with_gof(x, 1000, 7, hardware_threads());
  const double s = seconds_since(t0);
  const bool good = f.p_value && *f.p_value < kExponentialMaxP && s <= kPowerLawSeconds;
  ok = ok && good;
  detail += fmt("exponential p = %.3f (needs < %.1f) with %zu replicates; %.1f s (limit %.0f s)",
                f.p_value.value_or(-1.0), kExponentialMaxP, f.bootstrap_reps, s, kPowerLawSeconds);
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

std::string power_law_info() {
  std::string out;
  for (double alpha : {2.0, 2.5, 3.0}) {
    int close = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      Rng rng(seed * 7919);
      std::vector<double> x(10000);
      for (auto& v : x) v = sample_power_law(rng, alpha, 1.0);
      close += std::abs(fit_power_law(x).alpha - alpha) <= kAlphaTolerance;
    }
    out += fmt("%salpha %.1f: %d/50", out.empty() ? "" : ", ", alpha, close);
  }
  out = "power-law fits within tolerance over 50 extra seeds: " + out;

  // Rejection rate of the goodness-of-fit test on exponential data. The
  // KS-chosen cutoff often moves into a short tail where a power law cannot be
  // rejected, so the verdict depends on the draw.
  int rejected = 0;
  constexpr int kSeeds = 10;
  for (int i = 0; i < kSeeds; ++i) {
    Rng rng(90000 + static_cast<std::uint64_t>(i));
    std::vector<double> x(10000);
    for (auto& v : x) v = rng.exponential(1.0);
    const PowerLawFit f = fit_power_law_with_gof(x, 100, static_cast<std::uint64_t>(i), hardware_threads());
    rejected += *f.p_value < kExponentialMaxP;
  }
  return out + fmt("; exponential samples (n=10000, 100 replicates) with p < %.1f: %d/%d", kExponentialMaxP,
                   rejected, kSeeds);
}

// --- MTLD

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto sp = text.find(' ', pos);
    if (sp == std::string::npos) sp = text.size();
    out.push_back(text.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

Outcome mtld_check() {
  // Values traced by hand through the forward and backward factor counts.
  const std::pair<const char*, double> oracle[] = {
      {"a a a a", 2.0},
      {"a b a b a b a b a b", 10.0 / 3.0},
      {"the cat sat on the mat and the dog sat on the log", 13.0},
      {"a b c a b c a b c a b c", 6.0},
      {"i think that i think that you think that we all think so", 6.683962264150944},
  };
  std::size_t exact = 0;
  for (const auto& [text, want] : oracle) exact += std::abs(mtld_words(split(text)) - want) <= kMtldOracleTolerance;

  Rng rng(400);
  const auto vocab = testing::make_vocabulary(rng, 3000);
  testing::Zipf zipf(vocab.size(), 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    std::vector<std::string> words(2000 + rng.below(3001));
    for (auto& w : words) w = vocab[zipf(rng)];
    auto doubled = words;
    doubled.insert(doubled.end(), words.begin(), words.end());
    const double m = mtld_words(words);
    worst = std::max(worst, std::abs(mtld_words(doubled) - m) / m);
  }
  const std::size_t n = std::size(oracle);
  const bool ok = exact == n && worst <= kMtldConcatTolerance;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("%zu/%zu hand-traced values exact; worst self-concatenation change %.2f%% over 10 texts (limit %.0f%%)",
              exact, n, 100.0 * worst, 100.0 * kMtldConcatTolerance)};
}

// --- edit distance

Outcome edit_distance() {
  Rng rng(500);
  std::size_t mismatches = 0, exhaustive = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t alphabet = 2 + rng.below(4);
    auto draw = [&] {
      std::vector<std::string> s(rng.below(11));
      for (auto& w : s) w = std::string(1, static_cast<char>('a' + rng.below(alphabet)));
      return s;
    };
    const auto ref = draw(), hyp = draw();
    const WordErrors got = word_errors(ref, hyp);
    const oracle::EditCounts g{got.ins, got.del, got.sub};
    bool same = g == oracle::edit_counts(ref, hyp);
    // Walking every alignment path is affordable only for short pairs.
    if (ref.size() <= 7 && hyp.size() <= 7) {
      ++exhaustive;
      same = same && g == oracle::edit_counts_exhaustive(ref, hyp);
    }
    mismatches += !same;
  }
  return {mismatches == 0 ? Outcome::kPass : Outcome::kFail,
          fmt("%zu/1000 pairs differ from the full-table DP oracle (%zu also checked against every alignment path)",
              mismatches, exhaustive)};
}

// --- betweenness

ConversationalNetwork graph(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  ConversationalNetwork net;
  for (std::size_t v = 0; v < n; ++v) net.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
  for (auto [u, v] : edges) net.edges[{std::min(u, v), std::max(u, v)}] = 1;
  return net;
}

std::vector<double> bc(const ConversationalNetwork& net) {
  std::vector<double> out;
  for (const auto& c : centralities(net)) out.push_back(c.betweenness);
  return out;
}

Outcome betweenness() {
  Rng rng(600);
  std::size_t mismatches = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(8);
    const double density = rng.uniform();
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.bernoulli(density)) edges.insert({u, v});
    const auto got = bc(graph(n, edges));
    const auto want = oracle::betweenness(n, edges);
    bool same = true;
    for (std::size_t v = 0; v < n; ++v) same = same && std::abs(got[v] - want[v]) <= kBetweennessTolerance;
    mismatches += !same;
  }
  const bool path = bc(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) == std::vector<double>{0, 3, 4, 3, 0};
  const bool star = bc(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == std::vector<double>{6, 0, 0, 0, 0};
  std::set<std::pair<std::size_t, std::size_t>> k5;
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v) k5.insert({u, v});
  const bool complete = bc(graph(5, k5)) == std::vector<double>(5, 0.0);
  const bool ok = mismatches == 0 && path && star && complete;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("%zu/200 random graphs differ from path enumeration; path %s, star %s, complete %s", mismatches,
              path ? "exact" : "wrong", star ? "exact" : "wrong", complete ? "exact" : "wrong")};
}

// --- alignment

using Seq = std::vector<int>;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs equal_pairs(const Seq& a, const Seq& b) {
  Pairs out;
  for (const auto& op : opcodes(a, b)) {
    if (op.kind != OpKind::kEqual) continue;
    for (std::size_t k = 0; k < op.a_end - op.a_begin; ++k) out.emplace_back(op.a_begin + k, op.b_begin + k);
  }
  return out;
}

bool tiles(const Seq& a, const Seq& b) {
  std::size_t i = 0, j = 0;
  for (const auto& op : opcodes(a, b)) {
    if (op.a_begin != i || op.b_begin != j || op.a_end < op.a_begin || op.b_end < op.b_begin) return false;
    const std::size_t la = op.a_end - op.a_begin, lb = op.b_end - op.b_begin;
    if (op.kind == OpKind::kEqual && (la != lb || !std::equal(a.begin() + i, a.begin() + op.a_end, b.begin() + j)))
      return false;
    if (op.kind == OpKind::kDelete && (la == 0 || lb != 0)) return false;
    if (op.kind == OpKind::kInsert && (la != 0 || lb == 0)) return false;
    if (op.kind == OpKind::kReplace && (la == 0 || lb == 0)) return false;
    i = op.a_end;
    j = op.b_end;
  }
  return i == a.size() && j == b.size();
}

// Common tokens are distinct and occur once in each sequence in the same
// order; every other token is absent from the other sequence (and may repeat
// within its own). The common tokens then form the only longest common
// subsequence, which gestalt matching always recovers.
std::pair<Seq, Seq> constructed_pair(Rng& rng) {
  const std::size_t common = rng.below(9);
  Seq shared(common);
  std::iota(shared.begin(), shared.end(), 0);
  for (std::size_t i = common; i-- > 1;) std::swap(shared[i], shared[rng.below(i + 1)]);
  auto spread = [&](int base, std::size_t extra_pool) {
    Seq s = shared;
    const std::size_t extra = rng.below(12 - common + 1);
    for (std::size_t e = 0; e < extra; ++e) {
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng.below(s.size() + 1)),
               base + static_cast<int>(rng.below(extra_pool)));
    }
    return s;
  };
  Seq a = spread(100, 3);
  Seq b = spread(200, 12);
  return {a, b};
}

Outcome alignment() {
  Rng rng(700);
  std::size_t constructed = 0, covered = 0;
  while (constructed < 1000) {
    const auto [a, b] = constructed_pair(rng);
    const auto lcs = oracle::unique_lcs(a, b);
    if (!lcs) continue;
    ++constructed;
    covered += equal_pairs(a, b) == *lcs;
  }
  std::size_t tiled = 0;
  for (int round = 0; round < 1000; ++round) {
    Seq a(rng.below(31)), b(rng.below(31));
    const std::size_t alphabet = 1 + rng.below(8);
    for (auto& x : a) x = static_cast<int>(rng.below(alphabet));
    for (auto& x : b) x = static_cast<int>(rng.below(alphabet));
    tiled += tiles(a, b);
  }
  const bool ok = covered == constructed && tiled == 1000;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("equal opcodes cover the unique LCS in %zu/%zu constructed cases; opcodes tile both inputs in %zu/1000",
              covered, constructed, tiled)};
}

std::string alignment_info() {
  Rng rng(701);
  std::size_t unique = 0, covered = 0;
  for (int round = 0; round < 5000; ++round) {
    Seq a(1 + rng.below(12)), b(1 + rng.below(12));
    const std::size_t alphabet = 3 + rng.below(4);
    for (auto& x : a) x = static_cast<int>(rng.below(alphabet));
    for (auto& x : b) x = static_cast<int>(rng.below(alphabet));
    const auto lcs = oracle::unique_lcs(a, b);
    if (!lcs) continue;
    ++unique;
    covered += equal_pairs(a, b) == *lcs;
  }
  return fmt("unconstrained random sequences with a unique LCS: equal opcodes cover it in %zu/%zu (%.1f%% missed)",
             covered, unique, 100.0 * static_cast<double>(unique - covered) / static_cast<double>(unique));
}

// --- determinism

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {Outcome::kFail, "needs --cli"};
  TempDir tmp("determinism");
  const fs::path clear = tmp.path() / "clear", srt = tmp.path() / "srt";
  fs::create_directories(clear);
  fs::create_directories(srt);
  Rng rng(800);
  const auto vocab = testing::make_vocabulary(rng, 1500);
  for (int season = 1; season <= 2; ++season) {
    for (int ep = 1; ep <= 3; ++ep) {
      const Episode e = testing::synthetic_episode(rng, vocab, {"DT", season, ep, 1500, 7, true, true, true});
      testing::Perturbation applied;
      save_episode(e, clear / episode_file_name(e));
      write_file(srt / (e.id() + ".srt"), testing::write_srt(testing::perturb_episode(rng, e, 0.01, 0.002, applied)));
    }
  }
  const auto inputs = snapshot(tmp.path());
  std::vector<std::map<std::string, std::string>> runs;
  std::string failed;
  for (const char* name : {"run1", "run2"}) {
    const fs::path d = tmp.path() / name;
    fs::create_directories(d);
    const std::vector<std::pair<std::string, std::string>> commands{
        {"encrypt", "encrypt " + q(clear) + " --out " + q(d / "enc")},
        {"recover", "recover " + q(d / "enc") + " " + q(srt) + " --out " + q(d / "rec") + " --threads 2"},
        {"eval", "eval " + q(clear) + " " + q(d / "rec") + " --format json --out " + q(d / "eval")},
        {"stats", "stats " + q(clear) + " --seed 5 --bootstrap 50 --threads 2 --out " + q(d / "stats")},
        {"network", "network " + q(clear) + " --out " + q(d / "net")},
    };
    for (const auto& [cmd, args] : commands) {
      // The recovery summary is not an episode; eval reads the directory.
      if (cmd == "eval") fs::rename(d / "rec" / "summary.json", d / "summary.json");
      if (run(cli + " " + args + " > " + q(d / ("stdout_" + cmd + ".txt")) + " 2> /dev/null") != 0) failed += cmd + " ";
    }
    runs.push_back(snapshot(d));
  }
  bool untouched = true;
  for (const auto& [file, bytes] : inputs) untouched = untouched && read_file(tmp.path() / file) == bytes;
  std::size_t differing = 0;
  for (const auto& [file, bytes] : runs[0]) {
    auto it = runs[1].find(file);
    differing += it == runs[1].end() || it->second != bytes;
  }
  differing += runs[1].size() > runs[0].size() ? runs[1].size() - runs[0].size() : 0;
  const bool ok = failed.empty() && differing == 0 && untouched && runs[0].size() > 20;
  return {ok ? Outcome::kPass : Outcome::kFail,
          fmt("%zu files and stdout captures compared across two runs of encrypt/recover/eval/stats/network, %zu "
              "differ; inputs %s%s%s",
              runs[0].size(), differing, untouched ? "unchanged" : "MODIFIED", failed.empty() ? "" : "; failed: ",
              failed.c_str())};
}

// --- gated real-data check

Outcome real_data() {
  const char* env = std::getenv("SCRIPTSYNC_REAL_DATA");
  if (!env || !*env) return {Outcome::kSkip, "set SCRIPTSYNC_REAL_DATA=DIR (DIR/clear, DIR/srt) to compare with published rates"};
  const fs::path dir(env);
  const std::map<std::string, std::pair<double, double>> published{
      {"BB", {1.6, 4.6}}, {"GOT", {0.4, 1.2}}, {"HOC", {0.2, 0.7}}};
  std::vector<Episode> clear;
  for (const auto& f : list_files(dir / "clear", ".json")) clear.push_back(load_episode(f));
  std::vector<Episode> enc;
  for (const auto& e : clear) enc.push_back(encrypt_episode(e));
  std::map<std::string, std::string> manifest;
  if (fs::exists(dir / "manifest.json")) manifest = load_manifest(dir / "manifest.json");
  const CorpusRecovery r = recover_corpus(enc, dir / "srt", manifest, hardware_threads());
  std::map<std::string, const Episode*> by_id;
  for (const auto& e : clear) by_id[e.id()] = &e;
  std::vector<ErrorReport> reports;
  for (const auto& rec : r.recovered) reports.push_back(episode_report(*by_id.at(rec.id), rec.episode));
  std::string detail = fmt("%zu recovered, %zu skipped", r.recovered.size(), r.skipped.size());
  bool ok = !reports.empty();
  for (const auto& s : summarize_by_series(reports)) {
    detail += fmt("; %s WER %.1f SER %.1f", s.series.c_str(), s.wer_percent, s.ser_percent);
    auto it = published.find(s.series);
    if (it == published.end()) continue;
    const bool good = std::abs(s.wer_percent - it->second.first) <= kRealWerTolerance &&
                      std::abs(s.ser_percent - it->second.second) <= kRealSerTolerance;
    ok = ok && good;
    detail += fmt(" (published %.1f/%.1f%s)", it->second.first, it->second.second, good ? "" : ", out of tolerance");
  }
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string cli;
  app.add_option("--cli", cli, "Path to the scriptsync executable");
  CLI11_PARSE(app, argc, argv);
  if (!cli.empty()) cli = "'" + cli + "'";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"round_trip", round_trip},
      {"perturbation_tracking", perturbation},
      {"real_data_error_rates", real_data},
      {"truncation_equivalence", [&] { return truncation(cli); }},
      {"throughput", throughput},
      {"power_law_fit", power_law},
      {"mtld", mtld_check},
      {"edit_distance", edit_distance},
      {"betweenness", betweenness},
      {"alignment", alignment},
      {"cli_determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Outcome::kPass ? "PASS" : o.status == Outcome::kFail ? "FAIL" : "SKIP";
    failures += o.status == Outcome::kFail;
    std::printf("%s %-24s %s\n", tag, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("INFO %-24s %s\n", "power_law_fit", power_law_info().c_str());
  std::printf("INFO %-24s %s\n", "alignment", alignment_info().c_str());
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
