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

#include "rdom/reductions.hpp"

#include <algorithm>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {

void require_minimum(const Graph& g, const Labeling& f,
                     const ExhaustiveLimits& limits) {
  f.check_fits(g);
  if (!validate(g, f, 2).valid)
    throw Error(ErrorCode::kNotMinimum, "labeling is not a valid 2-attack labeling");
  SolveOptions opts;
  opts.limits = limits;
  long gamma = solve(g, opts).gamma;
  if (weight(f) != gamma)
    throw Error(ErrorCode::kNotMinimum,
                "weight " + std::to_string(weight(f)) + " but gamma is " +
                    std::to_string(gamma));
}

PrivateNeighborAssignment assign_private_neighbors(
    const Graph& g, const Labeling& f, const ExhaustiveLimits& limits) {
  require_minimum(g, f, limits);
  auto parts = partition(g, f);

  // Working adjacency; only 0-2 edges are ever deleted.
  std::vector<VertexSet> adj;
  adj.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));

  PrivateNeighborAssignment out;
  std::vector<Vertex> without;
  for (Vertex t : parts.twos) {
    std::optional<Vertex> own;
    for (Vertex v : adj[t] & parts.zeros) {
      if (adj[v].intersection_size(parts.twos) == 1) {
        own = v;
        break;
      }
    }
    if (own)
      out.matching.emplace_back(t, *own);
    else
      without.push_back(t);
  }
  for (Vertex t : without) {
    // Every 2-vertex of a minimum labeling has a 0-neighbor, and the
    // deletions below never touch edges at t's remaining 0-neighbors.
    VertexSet candidates = adj[t] & parts.zeros;
    if (candidates.empty())
      throw Error(ErrorCode::kNotMinimum, "2-vertex without a 0-neighbor");
    Vertex v = *candidates.begin();
    for (Vertex other : adj[v] & parts.twos) {
      if (other == t) continue;
      adj[v].erase(other);
      adj[other].erase(v);
      out.removed.emplace_back(std::min(v, other), std::max(v, other));
    }
    out.matching.emplace_back(t, v);
  }
  std::sort(out.matching.begin(), out.matching.end());

  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w : adj[u])
      if (u < w) edges.emplace_back(u, w);
  std::vector<ExternalId> ids(g.external_ids().begin(), g.external_ids().end());
  out.spanning = build_graph(g.order(), edges, std::move(ids));
  return out;
}

StrippedGraph strip_ones(const Graph& g, const Labeling& f,
                         const ExhaustiveLimits& limits) {
  require_minimum(g, f, limits);
  auto parts = partition(g, f);
  VertexSet keep = parts.zeros | parts.twos;
  std::vector<int> labels;
  for (Vertex v : keep) labels.push_back(f[v]);
  return {induced_subgraph(g, keep), Labeling(std::move(labels))};
}

}  // namespace rdom
