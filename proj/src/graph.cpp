// Copyright 2026 The rdom Authors
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

#include "rdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidEccd: return "InvalidEccd";
    case ErrorCode::kNotMinimum: return "NotMinimum";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kIncompatibleTorus: return "IncompatibleTorus";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kUnknownNeighbor: return "UnknownNeighbor";
    case ErrorCode::kMixedLabels: return "MixedLabels";
    case ErrorCode::kInvalidOptions: return "InvalidOptions";
  }
  return "Unknown";
}

std::optional<Vertex> Graph::internal_id(ExternalId id) const {
  auto it = by_external_.find(id);
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(std::size_t order, std::span<const Edge> edges,
                  std::vector<ExternalId> external_ids) {
  Graph g;
  if (external_ids.empty()) {
    external_ids.resize(order);
    for (std::size_t i = 0; i < order; ++i)
      external_ids[i] = static_cast<ExternalId>(i);
  }
  if (external_ids.size() != order)
    throw Error(ErrorCode::kOutOfRange, "external id count " +
                                            std::to_string(external_ids.size()) +
                                            " differs from order " +
                                            std::to_string(order));
  g.adjacency_.assign(order, VertexSet(order));
  g.lists_.resize(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order)
      throw Error(ErrorCode::kOutOfRange,
                  "vertex " + std::to_string(std::max(u, v)) +
                      " outside 0.." + std::to_string(order) + ")");
    if (u == v)
      throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
  }
  for (Vertex v = 0; v < order; ++v) {
    g.lists_[v] = g.adjacency_[v].to_vector();
    g.edge_count_ += g.lists_[v].size();
  }
  g.edge_count_ /= 2;
  for (Vertex v = 0; v < order; ++v) {
    if (external_ids[v] < 0)
      throw Error(ErrorCode::kOutOfRange,
                  "negative external id " + std::to_string(external_ids[v]));
    if (!g.by_external_.emplace(external_ids[v], v).second)
      throw Error(ErrorCode::kOutOfRange,
                  "repeated external id " + std::to_string(external_ids[v]));
  }
  g.external_ids_ = std::move(external_ids);
  return g;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex v : s) out |= g.neighbors(v);
  out -= s;
  return out;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbor_list(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Graph ball(const Graph& g, Vertex root, std::size_t radius) {
  if (root >= g.order())
    throw Error(ErrorCode::kOutOfRange, "ball root " + std::to_string(root));
  auto dist = bfs_distances(g, root);
  VertexSet keep(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] && *dist[v] <= radius) keep.insert(v);
  return induced_subgraph(g, keep);
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorCode::kEmptyGraph, "maximum degree of the empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<std::optional<Vertex>> induced_index(const Graph& g,
                                                 const VertexSet& keep) {
  std::vector<std::optional<Vertex>> index(g.order());
  Vertex next = 0;
  for (Vertex v : keep) index[v] = next++;
  return index;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  auto index = induced_index(g, keep);
  std::vector<ExternalId> ids;
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    ids.push_back(g.external_id(v));
    for (Vertex w : g.neighbor_list(v))
      if (v < w && index[w]) edges.emplace_back(*index[v], *index[w]);
  }
  std::size_t order = ids.size();
  return build_graph(order, edges, std::move(ids));
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](const auto& d) { return d.has_value(); });
}

}  // namespace rdom
