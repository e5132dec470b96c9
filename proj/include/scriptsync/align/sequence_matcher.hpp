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

// Ratcliff-Obershelp sequence matching ("gestalt pattern matching").
//
// The longest contiguous matching block of the two sequences is found first;
// the procedure then recurses on the pieces left and right of it. The
// longest-block search follows the classic hashed formulation: an index of
// element positions in `b`, and for every position in `a` the lengths of
// matches ending there.
//
// There is no junk or popularity heuristic. Ties between equally long blocks
// go to the smallest start in `a`, then the smallest start in `b`.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace scriptsync {

struct MatchBlock {
  std::size_t a_start = 0;
  std::size_t b_start = 0;
  std::size_t length = 0;

  friend bool operator==(const MatchBlock&, const MatchBlock&) = default;
};

enum class OpKind : std::uint8_t { kEqual, kReplace, kDelete, kInsert };

inline const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::kEqual: return "equal";
    case OpKind::kReplace: return "replace";
    case OpKind::kDelete: return "delete";
    case OpKind::kInsert: return "insert";
  }
  return "?";
}

// Half-open ranges [a_begin, a_end) and [b_begin, b_end).
struct EditOp {
  OpKind kind = OpKind::kEqual;
  std::size_t a_begin = 0;
  std::size_t a_end = 0;
  std::size_t b_begin = 0;
  std::size_t b_end = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

template <typename T, typename Hash = std::hash<T>>
class SequenceMatcher {
 public:
  SequenceMatcher(std::span<const T> a, std::span<const T> b) : a_(a), b_(b) {
    std::unordered_map<T, std::vector<std::uint32_t>, Hash> index;
    for (std::size_t j = 0; j < b_.size(); ++j) index[b_[j]].push_back(static_cast<std::uint32_t>(j));
    positions_.reserve(index.size());
    a_positions_.assign(a_.size(), kNoPositions);
    std::unordered_map<T, std::uint32_t, Hash> slot;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      auto it = index.find(a_[i]);
      if (it == index.end()) continue;
      auto [s, inserted] = slot.try_emplace(a_[i], static_cast<std::uint32_t>(positions_.size()));
      if (inserted) positions_.push_back(std::move(it->second));
      a_positions_[i] = s->second;
    }
    prev_len_.assign(b_.size(), 0);
    cur_len_.assign(b_.size(), 0);
  }

  // Longest block with a in [alo, ahi) and b in [blo, bhi); length 0 if none.
  MatchBlock find_longest_match(std::size_t alo, std::size_t ahi, std::size_t blo, std::size_t bhi) {
    MatchBlock best{alo, blo, 0};
    prev_touched_.clear();
    for (std::size_t i = alo; i < ahi; ++i) {
      cur_touched_.clear();
      const std::uint32_t p = a_positions_[i];
      if (p != kNoPositions) {
        const auto& js = positions_[p];
        auto it = std::lower_bound(js.begin(), js.end(), static_cast<std::uint32_t>(blo));
        for (; it != js.end() && *it < bhi; ++it) {
          const std::size_t j = *it;
          const std::uint32_t k = (j > blo ? prev_len_[j - 1] : 0) + 1;
          cur_len_[j] = k;
          cur_touched_.push_back(static_cast<std::uint32_t>(j));
          if (k > best.length) best = MatchBlock{i + 1 - k, j + 1 - k, k};
        }
      }
      for (std::uint32_t j : prev_touched_) prev_len_[j] = 0;
      std::swap(prev_len_, cur_len_);
      std::swap(prev_touched_, cur_touched_);
    }
    for (std::uint32_t j : prev_touched_) prev_len_[j] = 0;
    prev_touched_.clear();
    return best;
  }

  // Non-overlapping blocks, strictly increasing in both sequences, with
  // adjacent blocks merged. No trailing sentinel.
  const std::vector<MatchBlock>& matching_blocks() {
    if (blocks_) return *blocks_;
    std::vector<MatchBlock> found;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> pending{{0, a_.size(), 0, b_.size()}};
    while (!pending.empty()) {
      auto [alo, ahi, blo, bhi] = pending.back();
      pending.pop_back();
      if (alo >= ahi || blo >= bhi) continue;
      const MatchBlock m = find_longest_match(alo, ahi, blo, bhi);
      if (m.length == 0) continue;
      found.push_back(m);
      pending.emplace_back(alo, m.a_start, blo, m.b_start);
      pending.emplace_back(m.a_start + m.length, ahi, m.b_start + m.length, bhi);
    }
    std::sort(found.begin(), found.end(),
              [](const MatchBlock& x, const MatchBlock& y) { return x.a_start < y.a_start; });
    std::vector<MatchBlock> merged;
    for (const auto& m : found) {
      if (!merged.empty() && merged.back().a_start + merged.back().length == m.a_start &&
          merged.back().b_start + merged.back().length == m.b_start) {
        merged.back().length += m.length;
      } else {
        merged.push_back(m);
      }
    }
    blocks_ = std::move(merged);
    return *blocks_;
  }

  // Edit script turning `a` into `b`. Ranges tile both sequences.
  std::vector<EditOp> opcodes() {
    std::vector<EditOp> ops;
    std::size_t i = 0, j = 0;
    auto blocks = matching_blocks();
    blocks.push_back(MatchBlock{a_.size(), b_.size(), 0});
    for (const auto& m : blocks) {
      if (i < m.a_start && j < m.b_start) {
        ops.push_back({OpKind::kReplace, i, m.a_start, j, m.b_start});
      } else if (i < m.a_start) {
        ops.push_back({OpKind::kDelete, i, m.a_start, j, m.b_start});
      } else if (j < m.b_start) {
        ops.push_back({OpKind::kInsert, i, m.a_start, j, m.b_start});
      }
      i = m.a_start + m.length;
      j = m.b_start + m.length;
      if (m.length) ops.push_back({OpKind::kEqual, m.a_start, i, m.b_start, j});
    }
    return ops;
  }

 private:
  static constexpr std::uint32_t kNoPositions = 0xffffffffu;

  std::span<const T> a_;
  std::span<const T> b_;
  // Sorted positions in b of each distinct element that also occurs in a.
  std::vector<std::vector<std::uint32_t>> positions_;
  std::vector<std::uint32_t> a_positions_;
  // Match lengths ending at (i - 1, j) and (i, j); zero outside touched slots.
  std::vector<std::uint32_t> prev_len_;
  std::vector<std::uint32_t> cur_len_;
  std::vector<std::uint32_t> prev_touched_;
  std::vector<std::uint32_t> cur_touched_;
  std::optional<std::vector<MatchBlock>> blocks_;
};

template <typename T>
std::vector<MatchBlock> matching_blocks(std::span<const T> a, std::span<const T> b) {
  return SequenceMatcher<T>(a, b).matching_blocks();
}

template <typename T>
std::vector<EditOp> opcodes(std::span<const T> a, std::span<const T> b) {
  return SequenceMatcher<T>(a, b).opcodes();
}

template <typename T>
std::vector<MatchBlock> matching_blocks(const std::vector<T>& a, const std::vector<T>& b) {
  return matching_blocks(std::span<const T>(a), std::span<const T>(b));
}

template <typename T>
std::vector<EditOp> opcodes(const std::vector<T>& a, const std::vector<T>& b) {
  return opcodes(std::span<const T>(a), std::span<const T>(b));
}

}  // namespace scriptsync
