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

// Conversational networks from addressee annotations, and vertex
// centralities.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/util/csv.hpp"

namespace scriptsync {

struct ConversationalNetwork {
  // Sorted labels.
  std::vector<std::string> vertices;
  // (u, v) vertex indices with u < v -> number of turns between them in
  // either direction.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;

  std::size_t index_of(const std::string& name) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

// One undirected edge per (speaker, addressee) pair. Turns without annotated
// addressees, empty addressee lists (soliloquies) and self-addressing add
// nothing.
inline ConversationalNetwork build_network(const std::vector<Episode>& episodes) {
  std::map<std::pair<std::string, std::string>, std::size_t> named;
  for (const auto& e : episodes) {
    for (const auto& t : e.turns) {
      if (!t.addressees) continue;
      std::set<std::string> seen;
      for (const auto& a : *t.addressees) {
        if (a == t.speaker || !seen.insert(a).second) continue;
        auto key = t.speaker < a ? std::make_pair(t.speaker, a) : std::make_pair(a, t.speaker);
        named[key] += 1;
      }
    }
  }
  ConversationalNetwork net;
  std::set<std::string> names;
  for (const auto& [key, _] : named) {
    names.insert(key.first);
    names.insert(key.second);
  }
  net.vertices.assign(names.begin(), names.end());
  for (const auto& [key, w] : named) net.edges[{net.index_of(key.first), net.index_of(key.second)}] = w;
  return net;
}

struct VertexCentrality {
  std::string name;
  std::size_t degree = 0;
  std::size_t weighted_degree = 0;
  double betweenness = 0.0;
};

namespace network_detail {

struct Arc {
  std::size_t to;
  double length;
};

inline std::vector<std::vector<Arc>> adjacency(const ConversationalNetwork& net, bool weighted) {
  std::vector<std::vector<Arc>> adj(net.vertices.size());
  for (const auto& [e, w] : net.edges) {
    const double len = weighted ? 1.0 / static_cast<double>(w) : 1.0;
    adj[e.first].push_back({e.second, len});
    adj[e.second].push_back({e.first, len});
  }
  return adj;
}

}  // namespace network_detail

// Brandes' dependency accumulation. Unweighted: BFS on the simple graph.
// Weighted: Dijkstra with edge length 1 / weight, so frequent interlocutors
// are close. Each unordered pair is counted once, endpoints excluded, no
// normalization.
inline std::vector<VertexCentrality> centralities(const ConversationalNetwork& net, bool weighted = false) {
  using network_detail::Arc;
  const std::size_t n = net.vertices.size();
  const auto adj = network_detail::adjacency(net, weighted);
  std::vector<VertexCentrality> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v].name = net.vertices[v];
  for (const auto& [e, w] : net.edges) {
    out[e.first].degree += 1;
    out[e.second].degree += 1;
    out[e.first].weighted_degree += w;
    out[e.second].weighted_degree += w;
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double tolerance = 1e-9;
  std::vector<double> bc(n, 0.0), dist(n), sigma(n), delta(n);
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> order;
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    dist[s] = 0.0;
    sigma[s] = 1.0;
    if (!weighted) {
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        order.push_back(v);
        for (const Arc& a : adj[v]) {
          if (dist[a.to] == kInf) {
            dist[a.to] = dist[v] + 1.0;
            q.push(a.to);
          }
          if (dist[a.to] == dist[v] + 1.0) {
            sigma[a.to] += sigma[v];
            preds[a.to].push_back(v);
          }
        }
      }
    } else {
      using Item = std::pair<double, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      std::vector<bool> done(n, false);
      pq.push({0.0, s});
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = true;
        order.push_back(v);
        for (const Arc& a : adj[v]) {
          const double nd = d + a.length;
          if (nd < dist[a.to] - tolerance) {
            dist[a.to] = nd;
            sigma[a.to] = sigma[v];
            preds[a.to].assign(1, v);
            pq.push({nd, a.to});
          } else if (std::abs(nd - dist[a.to]) <= tolerance && !done[a.to]) {
            sigma[a.to] += sigma[v];
            preds[a.to].push_back(v);
          }
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  for (std::size_t v = 0; v < n; ++v) out[v].betweenness = bc[v] / 2.0;
  return out;
}

inline std::string edge_list_csv(const ConversationalNetwork& net) {
  std::string out = "source,target,weight\n";
  for (const auto& [e, w] : net.edges) {
    out += csv::field(net.vertices[e.first]) + "," + csv::field(net.vertices[e.second]) + "," + std::to_string(w) + "\n";
  }
  return out;
}

namespace network_detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace network_detail

inline std::string to_graphml(const ConversationalNetwork& net, const std::vector<VertexCentrality>& c) {
  using network_detail::xml_escape;
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
      "  <key id=\"betweenness\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n"
      "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      "  <graph id=\"conversations\" edgedefault=\"undirected\">\n";
  char buf[64];
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    out += "    <node id=\"" + xml_escape(net.vertices[v]) + "\">\n";
    if (v < c.size()) {
      out += "      <data key=\"degree\">" + std::to_string(c[v].degree) + "</data>\n";
      std::snprintf(buf, sizeof buf, "%.6f", c[v].betweenness);
      out += "      <data key=\"betweenness\">" + std::string(buf) + "</data>\n";
    }
    out += "    </node>\n";
  }
  for (const auto& [e, w] : net.edges) {
    out += "    <edge source=\"" + xml_escape(net.vertices[e.first]) + "\" target=\"" +
           xml_escape(net.vertices[e.second]) + "\">\n";
    out += "      <data key=\"weight\">" + std::to_string(w) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

}  // namespace scriptsync
