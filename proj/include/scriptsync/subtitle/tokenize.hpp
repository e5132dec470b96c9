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

#include <string>
#include <string_view>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/core/text.hpp"

namespace scriptsync {

inline constexpr std::string_view kEllipsis = "…";

namespace tokenize_detail {

// Punctuation split off the front of a chunk.
inline bool is_leading_punct(char32_t c) {
  switch (c) {
    case U'"': case U'(': case U'[': case U'¿': case U'¡':
    case U'«': case U'“': case U'…':
      return true;
    default:
      return false;
  }
}

// Punctuation split off the back of a chunk.
inline bool is_trailing_punct(char32_t c) {
  switch (c) {
    case U'.': case U'!': case U'?': case U',': case U';': case U':':
    case U'"': case U')': case U']': case U'»': case U'”': case U'…':
      return true;
    default:
      return false;
  }
}

struct CodePoint {
  char32_t value;
  std::size_t begin;
  std::size_t end;
};

inline std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> cps;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t begin = pos;
    const char32_t c = text::next_code_point(s, pos);
    cps.push_back({c, begin, pos});
  }
  return cps;
}

inline void split_chunk(std::string_view chunk, std::vector<Token>& out) {
  const auto cps = decode(chunk);
  std::size_t lo = 0;
  std::size_t hi = cps.size();

  std::vector<Token> head;
  while (lo < hi) {
    if (cps[lo].value == U'.') {
      std::size_t run = lo;
      while (run < hi && cps[run].value == U'.') ++run;
      if (run - lo < 3) break;
      head.push_back(Token::word(std::string(kEllipsis)));
      lo = run;
    } else if (is_leading_punct(cps[lo].value)) {
      head.push_back(Token::word(std::string(chunk.substr(cps[lo].begin, cps[lo].end - cps[lo].begin))));
      ++lo;
    } else {
      break;
    }
  }

  std::vector<Token> tail;  // reversed
  while (hi > lo) {
    const char32_t c = cps[hi - 1].value;
    if (c == U'.') {
      std::size_t run = hi;
      while (run > lo && cps[run - 1].value == U'.') --run;
      if (hi - run >= 3) {
        tail.push_back(Token::word(std::string(kEllipsis)));
        hi = run;
        continue;
      }
    }
    if (!is_trailing_punct(c)) break;
    tail.push_back(Token::word(std::string(chunk.substr(cps[hi - 1].begin, cps[hi - 1].end - cps[hi - 1].begin))));
    --hi;
  }

  for (auto& t : head) out.push_back(std::move(t));
  if (lo < hi) out.push_back(Token::word(std::string(chunk.substr(cps[lo].begin, cps[hi - 1].end - cps[lo].begin))));
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(std::move(*it));
}

}  // namespace tokenize_detail

// Splits NFC-normalized text on whitespace, then peels sentence punctuation
// off both ends of every chunk into standalone tokens. A run of three or more
// periods becomes a single "…" token. Apostrophes and hyphens inside a chunk
// stay in the word.
inline std::vector<Token> tokenize(std::string_view input) {
  const std::string normalized = text::nfc(input);
  const std::string_view s = normalized;
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t chunk_begin = std::string_view::npos;
  while (pos < s.size()) {
    const std::size_t begin = pos;
    const char32_t c = text::next_code_point(s, pos);
    if (text::is_space(c)) {
      if (chunk_begin != std::string_view::npos) {
        tokenize_detail::split_chunk(s.substr(chunk_begin, begin - chunk_begin), out);
        chunk_begin = std::string_view::npos;
      }
    } else if (chunk_begin == std::string_view::npos) {
      chunk_begin = begin;
    }
  }
  if (chunk_begin != std::string_view::npos) tokenize_detail::split_chunk(s.substr(chunk_begin), out);
  return out;
}

// Sentence-final punctuation. The ellipsis only closes a sentence when it
// ends a cue; callers decide that.
inline bool is_sentence_final(std::string_view token) {
  return token == "." || token == "!" || token == "?" || token == kEllipsis;
}

// Punctuation that may trail a sentence-final mark and stays with it.
inline bool is_closing_punct(std::string_view token) {
  return token == "\"" || token == ")" || token == "]" || token == "»" || token == "”" ||
         token == "'";
}

// Joins tokens back into display text: punctuation attaches to the preceding
// word, opening marks to the following one. tokenize(detokenize(t)) == t for
// tokens produced by tokenize from single-spaced text without quotes.
inline std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  bool attach_next = false;
  for (const auto& t : tokens) {
    const bool opening = t.text == "(" || t.text == "[" || t.text == "¿" || t.text == "¡" ||
                         t.text == "«" || t.text == "“";
    const bool attach_prev = t.is_punctuation() && !opening && t.text != "-" && t.text != "\"";
    if (!out.empty() && !attach_prev && !attach_next) out += ' ';
    out += t.text;
    attach_next = opening;
  }
  return out;
}

}  // namespace scriptsync
