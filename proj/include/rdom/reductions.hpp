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

#ifndef RDOM_REDUCTIONS_HPP_
#define RDOM_REDUCTIONS_HPP_

#include <utility>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"
#include "rdom/solver.hpp"

namespace rdom {

// Constructive procedures on a minimum 2-attack labeling.

struct PrivateNeighborAssignment {
  // Spanning subgraph of the input (edge deletions only), same external ids.
  Graph spanning;
  // (2-labeled vertex, its private 0-labeled neighbor in `spanning`), sorted
  // by the first component.
  std::vector<std::pair<Vertex, Vertex>> matching;
  // Deleted edges as (u, v), u < v, in deletion order.
  std::vector<Edge> removed;
};

// Deletes edges so that every 2-labeled vertex gets an exterior private
// neighbor: 2-vertices that already have one keep their lowest-id one; each
// remaining 2-vertex t, in increasing id order, claims its lowest-id adjacent
// 0-vertex v and the edges from v to other 2-vertices are removed.
// Throws Error{kNotMinimum} unless f is valid for n = 2 with weight gamma_2R.
PrivateNeighborAssignment assign_private_neighbors(
    const Graph& g, const Labeling& f, const ExhaustiveLimits& limits = {});

struct StrippedGraph {
  Graph graph;
  Labeling labeling;
};

// Induced subgraph on V0 ∪ V2 with the restricted labeling.
// Throws Error{kNotMinimum} unless f is a minimum 2-attack labeling.
StrippedGraph strip_ones(const Graph& g, const Labeling& f,
                         const ExhaustiveLimits& limits = {});

// Throws Error{kNotMinimum} unless f validates at n = 2 and has weight
// gamma_2R(g).
void require_minimum(const Graph& g, const Labeling& f,
                     const ExhaustiveLimits& limits = {});

}  // namespace rdom

#endif  // RDOM_REDUCTIONS_HPP_
