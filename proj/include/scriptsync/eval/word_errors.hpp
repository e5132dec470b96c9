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
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scriptsync/core/model.hpp"

namespace scriptsync {

struct WordErrors {
  std::size_t ins = 0;
  std::size_t del = 0;
  std::size_t sub = 0;

  std::size_t total() const { return ins + del + sub; }

  WordErrors& operator+=(const WordErrors& o) {
    ins += o.ins;
    del += o.del;
    sub += o.sub;
    return *this;
  }

  friend bool operator==(const WordErrors&, const WordErrors&) = default;
};

inline std::vector<Token> strip_punctuation(const std::vector<Token>& tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!t.is_punctuation()) out.push_back(t);
  }
  return out;
}

namespace word_errors_detail {

struct Cell {
  std::size_t cost;
  std::size_t del;
  std::size_t ins;
  std::size_t sub;

  bool better_than(const Cell& o) const { return cost != o.cost ? cost < o.cost : del < o.del; }
};

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

// Levenshtein DP restricted to |i - j| <= band. Each cell keeps the
// lexicographically smallest (cost, deletions) alignment, which fixes the
// counts uniquely: among minimal alignments, substitutions are preferred over
// insertion + deletion pairs.
template <typename T, typename Eq>
Cell banded(std::span<const T> ref, std::span<const T> hyp, std::size_t band, Eq eq) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const Cell inf{kInf, kInf, 0, 0};
  std::vector<Cell> prev(m + 1, inf), cur(m + 1, inf);
  for (std::size_t j = 0; j <= std::min(m, band); ++j) prev[j] = Cell{j, 0, j, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t jlo = i > band ? i - band : 0;
    const std::size_t jhi = std::min(m, i + band);
    if (jlo > 0) cur[jlo - 1] = inf;
    for (std::size_t j = jlo; j <= jhi; ++j) {
      Cell best = inf;
      if (j == 0) {
        best = Cell{i, i, 0, 0};
      } else {
        const Cell& diag = prev[j - 1];
        if (diag.cost < kInf) {
          const bool same = eq(ref[i - 1], hyp[j - 1]);
          best = Cell{diag.cost + (same ? 0 : 1), diag.del, diag.ins, diag.sub + (same ? 0 : 1)};
        }
        const Cell& left = cur[j - 1];
        if (left.cost < kInf) {
          const Cell c{left.cost + 1, left.del, left.ins + 1, left.sub};
          if (c.better_than(best)) best = c;
        }
        const Cell& up = prev[j];
        if (up.cost < kInf) {
          const Cell c{up.cost + 1, up.del + 1, up.ins, up.sub};
          if (c.better_than(best)) best = c;
        }
      }
      cur[j] = best;
    }
    if (jhi + 1 <= m) cur[jhi + 1] = inf;
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace word_errors_detail

// Insertions, deletions and substitutions turning `ref` into `hyp` under a
// minimal unit-cost alignment. Runs a banded DP whose band doubles until the
// distance fits inside it, so cost is O((n + m) * distance).
template <typename T, typename Eq = std::equal_to<T>>
WordErrors word_errors(std::span<const T> ref, std::span<const T> hyp, Eq eq = Eq{}) {
  using namespace word_errors_detail;
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t full = std::max(n, m);
  std::size_t band = std::max<std::size_t>(n > m ? n - m : m - n, 16);
  for (;;) {
    band = std::min(band, full);
    const Cell c = banded(ref, hyp, band, eq);
    if (c.cost <= band || band == full) return WordErrors{c.ins, c.del, c.sub};
    band *= 2;
  }
}

inline WordErrors word_errors(const std::vector<Token>& ref, const std::vector<Token>& hyp) {
  return word_errors(std::span<const Token>(ref), std::span<const Token>(hyp),
                     [](const Token& x, const Token& y) { return x.text == y.text; });
}

inline WordErrors word_errors(const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  return word_errors(std::span<const std::string>(ref), std::span<const std::string>(hyp));
}

}  // namespace scriptsync
