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

// Clear-text recovery of an encrypted episode from subtitle tokens.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "scriptsync/align/sequence_matcher.hpp"
#include "scriptsync/cipher/cipher.hpp"
#include "scriptsync/core/model.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

struct SubtitleToken {
  Token clear;
  Code code;
};

inline std::vector<SubtitleToken> encrypt_subtitles(const std::vector<Token>& clear, int digits) {
  std::vector<SubtitleToken> out;
  out.reserve(clear.size());
  // Subtitle vocabularies are small next to their token counts.
  std::unordered_map<std::string, Code> cache;
  for (const auto& t : clear) {
    auto it = cache.find(t.text);
    if (it == cache.end()) it = cache.emplace(t.text, encrypt_token(t.text, digits)).first;
    out.push_back({t, it->second});
  }
  return out;
}

struct RecoveryReport {
  std::size_t reference_tokens = 0;
  std::size_t subtitle_tokens = 0;
  std::size_t matched = 0;
  // Reference tokens recovered as "<>".
  std::size_t deleted = 0;
  // Reference tokens recovered as "<word>".
  std::size_t substituted = 0;
  // Subtitle tokens with no reference counterpart.
  std::size_t discarded = 0;
};

struct RecoveryResult {
  Episode episode;
  RecoveryReport report;
};

// Aligns the episode's whole code stream against the subtitle code stream.
// Equal spans take the subtitle words; delete spans yield "<>" per reference
// token; replace spans pair tokens positionally as "<word>" and pad leftover
// reference tokens with "<>"; insert spans are dropped. Every turn keeps its
// token count.
inline RecoveryResult recover_episode(const Episode& encrypted, const std::vector<SubtitleToken>& subtitles) {
  if (!encrypted.encrypted) throw Error(encrypted.id() + ": episode is not encrypted");
  if (subtitles.empty()) throw Error(encrypted.id() + ": no subtitle content");

  // Codes are interned to dense integers so matching compares words, not strings.
  std::unordered_map<std::string, std::uint32_t> ids;
  auto intern = [&ids](const std::string& code) {
    return ids.try_emplace(code, static_cast<std::uint32_t>(ids.size())).first->second;
  };
  std::vector<std::uint32_t> reference;
  reference.reserve(encrypted.token_count());
  for (const auto& turn : encrypted.turns) {
    for (const auto& tok : turn.tokens) reference.push_back(intern(tok.text));
  }
  std::vector<std::uint32_t> subtitle;
  subtitle.reserve(subtitles.size());
  for (const auto& s : subtitles) {
    if (static_cast<int>(s.code.digits()) != encrypted.digits) {
      throw Error(encrypted.id() + ": subtitle codes use " + std::to_string(s.code.digits()) +
                  " digits, episode uses " + std::to_string(encrypted.digits));
    }
    subtitle.push_back(intern(s.code.value()));
  }

  RecoveryReport report;
  report.reference_tokens = reference.size();
  report.subtitle_tokens = subtitle.size();

  std::vector<Token> recovered;
  recovered.reserve(reference.size());
  SequenceMatcher<std::uint32_t> matcher(reference, subtitle);
  for (const EditOp& op : matcher.opcodes()) {
    const std::size_t a_len = op.a_end - op.a_begin;
    const std::size_t b_len = op.b_end - op.b_begin;
    switch (op.kind) {
      case OpKind::kEqual:
        for (std::size_t k = 0; k < a_len; ++k) recovered.push_back(subtitles[op.b_begin + k].clear);
        report.matched += a_len;
        break;
      case OpKind::kDelete:
        recovered.insert(recovered.end(), a_len, Token::deleted());
        report.deleted += a_len;
        break;
      case OpKind::kReplace: {
        const std::size_t paired = std::min(a_len, b_len);
        for (std::size_t k = 0; k < paired; ++k) {
          recovered.push_back(Token::substituted(subtitles[op.b_begin + k].clear.text));
        }
        recovered.insert(recovered.end(), a_len - paired, Token::deleted());
        report.substituted += paired;
        report.deleted += a_len - paired;
        report.discarded += b_len - paired;
        break;
      }
      case OpKind::kInsert:
        report.discarded += b_len;
        break;
    }
  }

  Episode out = encrypted;
  out.encrypted = false;
  out.digits = kDefaultDigits;
  std::size_t next = 0;
  for (auto& turn : out.turns) {
    for (auto& tok : turn.tokens) tok = std::move(recovered[next++]);
  }
  return {std::move(out), report};
}

}  // namespace scriptsync
