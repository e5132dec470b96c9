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

// Episode annotation model: speech turns, scenes and shots.
//
// An Episode is a plain value. Times are seconds (double) at millisecond
// resolution. Tokens carry either clear text or, when the episode is
// encrypted, a truncated lowercase hex digest of the clear text.

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scriptsync/core/text.hpp"

namespace scriptsync {

inline constexpr std::string_view kUnknownSpeaker = "unknown";

enum class TokenKind : std::uint8_t { kWord, kPunctuation };

// Recovery markers. A deleted token renders as "<>", a substituted one as
// "<text>".
enum class TokenTag : std::uint8_t { kPlain, kDeleted, kSubstituted };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;
  TokenTag tag = TokenTag::kPlain;

  static TokenKind classify(std::string_view text) {
    return text::all_punct(text) ? TokenKind::kPunctuation : TokenKind::kWord;
  }

  static Token word(std::string text) {
    const TokenKind kind = classify(text);
    return Token{std::move(text), kind, TokenTag::kPlain};
  }

  // Encrypted tokens carry no recoverable kind.
  static Token code(std::string hex) { return Token{std::move(hex), TokenKind::kWord, TokenTag::kPlain}; }

  static Token deleted() { return Token{std::string(), TokenKind::kWord, TokenTag::kDeleted}; }

  static Token substituted(std::string text) {
    const TokenKind kind = classify(text);
    return Token{std::move(text), kind, TokenTag::kSubstituted};
  }

  bool is_punctuation() const { return kind == TokenKind::kPunctuation; }

  // Serialized form, with recovery markers embedded.
  std::string render() const {
    switch (tag) {
      case TokenTag::kDeleted:
        return "<>";
      case TokenTag::kSubstituted:
        return "<" + text + ">";
      case TokenTag::kPlain:
        break;
    }
    return text;
  }

  // Inverse of render().
  static Token parse(std::string_view rendered) {
    if (rendered == "<>") return deleted();
    if (rendered.size() > 2 && rendered.front() == '<' && rendered.back() == '>') {
      return substituted(std::string(rendered.substr(1, rendered.size() - 2)));
    }
    return word(std::string(rendered));
  }

  friend bool operator==(const Token&, const Token&) = default;
};

struct SpeechTurn {
  double start = 0.0;
  double end = 0.0;
  std::string speaker{kUnknownSpeaker};
  // nullopt: addressees not annotated. Empty: annotated soliloquy.
  std::optional<std::vector<std::string>> addressees;
  std::vector<Token> tokens;

  double duration() const { return end - start; }

  friend bool operator==(const SpeechTurn&, const SpeechTurn&) = default;
};

struct Scene {
  double start = 0.0;
  double end = 0.0;

  double duration() const { return end - start; }

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct Shot {
  double start = 0.0;
  double end = 0.0;
  // Shots with equal labels share framing.
  std::optional<std::int64_t> recurring_cluster;

  double duration() const { return end - start; }

  friend bool operator==(const Shot&, const Shot&) = default;
};

struct Episode {
  std::string series;
  int season = 1;
  int episode = 1;
  double duration = 0.0;
  bool encrypted = false;
  // Hex digits per code; meaningful only when encrypted.
  int digits = 3;
  std::vector<SpeechTurn> turns;
  std::optional<std::vector<Scene>> scenes;
  std::optional<std::vector<Shot>> shots;

  // "SxxEyy", zero-padded to two digits.
  std::string season_episode() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "S%02dE%02d", season, episode);
    return buf;
  }

  // Corpus-wide key, e.g. "BB.S01E03".
  std::string id() const { return series + "." + season_episode(); }

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& t : turns) n += t.tokens.size();
    return n;
  }

  friend bool operator==(const Episode&, const Episode&) = default;
};

}  // namespace scriptsync
