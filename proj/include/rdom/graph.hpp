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

#ifndef RDOM_GRAPH_HPP_
#define RDOM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdom/vertex_set.hpp"

namespace rdom {

using ExternalId = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable finite simple undirected graph.
//
// Vertices carry contiguous internal ids 0..order-1 plus an external id (the
// number used in graph files). Adjacency is kept both as a bitset per vertex
// (for set algebra in the solvers) and as a sorted list (for iteration).
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }

  ExternalId external_id(Vertex v) const { return external_ids_[v]; }
  std::span<const ExternalId> external_ids() const { return external_ids_; }
  std::optional<Vertex> internal_id(ExternalId id) const;

  // Edges as (u, v) pairs with u < v, sorted.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::Full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.lists_ == b.lists_ && a.external_ids_ == b.external_ids_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>,
                           std::vector<ExternalId>);

  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<ExternalId> external_ids_;
  std::unordered_map<ExternalId, Vertex> by_external_;
  std::size_t edge_count_ = 0;
};

// Builds a canonical graph. Duplicate pairs (in either orientation) collapse.
// external_ids defaults to the identity; when given it must hold `order`
// distinct non-negative values.
// Throws Error{kOutOfRange} for ids >= order, Error{kSelfLoop} for (v, v).
Graph build_graph(std::size_t order, std::span<const Edge> edges,
                  std::vector<ExternalId> external_ids = {});

// (⋃_{v∈S} N(v)) \ S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

// Unweighted BFS distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      Vertex source);

// Induced subgraph on {v : d(root, v) <= radius}. Vertices keep their relative
// order and external ids. Throws Error{kOutOfRange} if root is not a vertex.
Graph ball(const Graph& g, Vertex root, std::size_t radius);

// Throws Error{kEmptyGraph} on the order-0 graph.
std::size_t max_degree(const Graph& g);

// Graph on `keep` with every edge of g among kept vertices. Internal ids are
// renumbered in increasing order of the original ids; external ids carry over.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Maps each kept vertex of g to its internal id in induced_subgraph(g, keep).
std::vector<std::optional<Vertex>> induced_index(const Graph& g,
                                                 const VertexSet& keep);

bool is_connected(const Graph& g);

}  // namespace rdom

#endif  // RDOM_GRAPH_HPP_
