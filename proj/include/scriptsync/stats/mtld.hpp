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

// Measure of Textual Lexical Diversity.

#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/core/text.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

inline constexpr double kMtldThreshold = 0.72;

// Recommended minimum number of words for a meaningful value.
inline constexpr std::size_t kMtldMinWords = 10;

namespace mtld_detail {

template <typename It>
double factor_count(It first, It last, double threshold) {
  double factors = 0.0;
  std::unordered_set<std::string> types;
  std::size_t count = 0;
  for (; first != last; ++first) {
    ++count;
    types.insert(*first);
    const double ttr = static_cast<double>(types.size()) / static_cast<double>(count);
    if (ttr < threshold) {
      factors += 1.0;
      types.clear();
      count = 0;
    }
  }
  if (count > 0) {
    const double ttr = static_cast<double>(types.size()) / static_cast<double>(count);
    factors += (1.0 - ttr) / (1.0 - threshold);
  }
  return factors;
}

}  // namespace mtld_detail

// Mean of the forward and backward passes: words / factors, where a factor
// closes each time the running type-token ratio falls below `threshold` and
// the unfinished remainder counts as a partial factor. `words` are compared
// as given; see mtld(tokens) for case folding.
inline double mtld_words(const std::vector<std::string>& words, double threshold = kMtldThreshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw Error("MTLD threshold must be within (0, 1)");
  const double forward = mtld_detail::factor_count(words.begin(), words.end(), threshold);
  const double backward = mtld_detail::factor_count(words.rbegin(), words.rend(), threshold);
  if (!(forward > 0.0) || !(backward > 0.0)) throw Error("undefined MTLD: no complete or partial factor");
  const double n = static_cast<double>(words.size());
  return 0.5 * (n / forward + n / backward);
}

// Words of a token stream for MTLD: punctuation and deletion markers dropped,
// case folded.
inline std::vector<std::string> mtld_vocabulary(const std::vector<Token>& tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.is_punctuation() || t.tag == TokenTag::kDeleted) continue;
    words.push_back(text::fold_case(t.text));
  }
  return words;
}

inline double mtld(const std::vector<Token>& tokens, double threshold = kMtldThreshold) {
  return mtld_words(mtld_vocabulary(tokens), threshold);
}

}  // namespace scriptsync
