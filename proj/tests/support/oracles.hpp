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

// Brute-force reference implementations used as test oracles. They favour
// obviousness over speed and share no code with the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace scriptsync::oracle {

struct Block {
  std::size_t i, j, k;
  bool operator==(const Block&) const = default;
};

// Longest common contiguous block in a[alo, ahi) x b[blo, bhi) by scanning
// every start pair; ties keep the smallest i, then the smallest j.
template <typename T>
Block longest_block(const std::vector<T>& a, const std::vector<T>& b, std::size_t alo, std::size_t ahi,
                    std::size_t blo, std::size_t bhi) {
  Block best{alo, blo, 0};
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      std::size_t k = 0;
      while (i + k < ahi && j + k < bhi && a[i + k] == b[j + k]) ++k;
      if (k > best.k) best = {i, j, k};
    }
  }
  return best;
}

// Recursive longest-block matching, blocks in order, adjacent ones merged.
template <typename T>
std::vector<Block> ratcliff_blocks(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<Block> out;
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t alo, std::size_t ahi, std::size_t blo, std::size_t bhi) {
        if (alo >= ahi || blo >= bhi) return;
        const Block m = longest_block(a, b, alo, ahi, blo, bhi);
        if (m.k == 0) return;
        rec(alo, m.i, blo, m.j);
        out.push_back(m);
        rec(m.i + m.k, ahi, m.j + m.k, bhi);
      };
  rec(0, a.size(), 0, b.size());
  std::vector<Block> merged;
  for (const auto& m : out) {
    if (!merged.empty() && merged.back().i + merged.back().k == m.i && merged.back().j + merged.back().k == m.j) {
      merged.back().k += m.k;
    } else {
      merged.push_back(m);
    }
  }
  return merged;
}

// Every longest common subsequence alignment, found by enumerating all
// subsets of `a` (|a| <= 16) and every embedding of each into `b`. Returns
// the matched (i, j) pairs when exactly one maximal alignment exists.
template <typename T>
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> unique_lcs(const std::vector<T>& a,
                                                                          const std::vector<T>& b) {
  const std::size_t n = a.size();
  std::size_t best = 0;
  std::uint64_t alignments = 0;
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) picked.push_back(i);
    }
    if (picked.size() < best) continue;
    // ways[p][j]: embeddings of picked[p..] into b[j..].
    const std::size_t m = b.size();
    std::vector<std::vector<std::uint64_t>> ways(picked.size() + 1, std::vector<std::uint64_t>(m + 1, 0));
    for (std::size_t j = 0; j <= m; ++j) ways[picked.size()][j] = 1;
    for (std::size_t p = picked.size(); p-- > 0;) {
      for (std::size_t j = m; j-- > 0;) {
        ways[p][j] = ways[p][j + 1] + (a[picked[p]] == b[j] ? ways[p + 1][j + 1] : 0);
      }
    }
    const std::uint64_t count = ways[0][0];
    if (count == 0) continue;
    if (picked.size() > best) {
      best = picked.size();
      alignments = 0;
    }
    alignments += count;
    if (count == 1) {
      found.clear();
      std::size_t j = 0;
      for (std::size_t p = 0; p < picked.size(); ++p) {
        while (!(a[picked[p]] == b[j] && ways[p + 1][j + 1] > 0)) ++j;
        found.emplace_back(picked[p], j);
        ++j;
      }
    }
  }
  if (alignments != 1) return std::nullopt;
  return found;
}

struct EditCounts {
  std::size_t ins = 0, del = 0, sub = 0;
  std::size_t cost() const { return ins + del + sub; }
  bool operator==(const EditCounts&) const = default;
};

// Minimal unit-cost alignment by memoized recursion over the full table;
// among minimal alignments the one with the fewest deletions (equivalently
// the most substitutions) wins.
template <typename T>
EditCounts edit_counts(const std::vector<T>& ref, const std::vector<T>& hyp) {
  std::map<std::pair<std::size_t, std::size_t>, EditCounts> memo;
  auto better = [](const EditCounts& x, const EditCounts& y) {
    return std::make_pair(x.cost(), x.del) < std::make_pair(y.cost(), y.del);
  };
  std::function<EditCounts(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> EditCounts {
    if (i == ref.size()) return {hyp.size() - j, 0, 0};
    if (j == hyp.size()) return {0, ref.size() - i, 0};
    if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
    EditCounts diag = go(i + 1, j + 1);
    if (!(ref[i] == hyp[j])) diag.sub += 1;
    EditCounts del = go(i + 1, j);
    del.del += 1;
    EditCounts ins = go(i, j + 1);
    ins.ins += 1;
    EditCounts best = diag;
    if (better(del, best)) best = del;
    if (better(ins, best)) best = ins;
    return memo[{i, j}] = best;
  };
  return go(0, 0);
}

// Same criterion by walking every alignment path; exponential, for tiny inputs.
template <typename T>
EditCounts edit_counts_exhaustive(const std::vector<T>& ref, const std::vector<T>& hyp) {
  std::optional<EditCounts> best;
  std::function<void(std::size_t, std::size_t, EditCounts)> walk = [&](std::size_t i, std::size_t j, EditCounts c) {
    if (i == ref.size() && j == hyp.size()) {
      if (!best || std::make_pair(c.cost(), c.del) < std::make_pair(best->cost(), best->del)) best = c;
      return;
    }
    if (i < ref.size() && j < hyp.size()) {
      EditCounts d = c;
      d.sub += !(ref[i] == hyp[j]);
      walk(i + 1, j + 1, d);
    }
    if (i < ref.size()) {
      EditCounts d = c;
      d.del += 1;
      walk(i + 1, j, d);
    }
    if (j < hyp.size()) {
      EditCounts d = c;
      d.ins += 1;
      walk(i, j + 1, d);
    }
  };
  walk(0, 0, {});
  return *best;
}

// Betweenness of every vertex by listing all shortest paths between each
// unordered pair explicitly (depth-first over simple paths).
inline std::vector<double> betweenness(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      std::vector<std::vector<std::size_t>> paths;
      std::size_t shortest = n + 1;
      std::vector<std::size_t> path{s};
      std::vector<bool> on(n, false);
      on[s] = true;
      std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        if (path.size() - 1 > shortest) return;
        if (v == t) {
          if (path.size() - 1 < shortest) {
            shortest = path.size() - 1;
            paths.clear();
          }
          paths.push_back(path);
          return;
        }
        for (std::size_t w = 0; w < n; ++w) {
          if (!adj[v][w] || on[w]) continue;
          on[w] = true;
          path.push_back(w);
          dfs(w);
          path.pop_back();
          on[w] = false;
        }
      };
      dfs(s);
      if (paths.empty()) continue;
      for (const auto& p : paths) {
        for (std::size_t k = 1; k + 1 < p.size(); ++k) bc[p[k]] += 1.0 / static_cast<double>(paths.size());
      }
    }
  }
  return bc;
}

struct PowerLawOracle {
  double alpha = 0.0;
  double x_min = 0.0;
  double ks = 0.0;
};

// Power-law fit scoring every distinct cutoff with a full KS scan.
inline PowerLawOracle power_law_fit(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  PowerLawOracle best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0 && x[k] == x[k - 1]) continue;
    const double m = static_cast<double>(n - k);
    double sum = 0.0;
    for (std::size_t i = k; i < n; ++i) sum += std::log(x[i]) - std::log(x[k]);
    if (!(sum > 0.0)) continue;
    const double alpha = 1.0 + m / sum;
    double d = 0.0;
    for (std::size_t i = k; i < n;) {
      std::size_t j = i;
      while (j < n && x[j] == x[i]) ++j;
      const double model = 1.0 - std::exp((1.0 - alpha) * (std::log(x[i]) - std::log(x[k])));
      d = std::max({d, std::abs(model - static_cast<double>(i - k) / m), std::abs(static_cast<double>(j - k) / m - model)});
      i = j;
    }
    if (d < best.ks) best = {alpha, x[k], d};
  }
  return best;
}

}  // namespace scriptsync::oracle
