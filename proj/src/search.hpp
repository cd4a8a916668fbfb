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

#ifndef RDOM_SRC_SEARCH_HPP_
#define RDOM_SRC_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"

namespace rdom::internal {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();
inline constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

// Incremental state for depth-first labeling search.
//
// Vertices are decided in a fixed order. After every assignment the state
// reports whether a constraint is already broken, judging only vertices whose
// whole neighborhood is decided:
//   * a closed 0-vertex needs a 2-neighbor;
//   * (n >= 2) a 2-vertex may be the only 2-neighbor of at most one closed
//     0-vertex.
// For n >= 3 the remaining subset conditions are checked at the leaves.
class LabelState {
 public:
  LabelState(const Graph& g, int attack_n, std::vector<Vertex> order,
             bool degree_bound);

  std::size_t depth() const { return depth_; }
  bool complete() const { return depth_ == order_.size(); }
  Vertex next_vertex() const { return order_[depth_]; }
  const std::vector<Vertex>& order() const { return order_; }

  long weight() const { return weight_; }
  std::size_t twos() const { return twos_; }
  std::size_t undecided() const { return order_.size() - depth_; }

  // Decides next_vertex(). Returns false when a constraint broke; pop()
  // must be called either way.
  bool push(int label);
  void pop();

  // Admissible lower bound on the final weight of any completion using at
  // most `max_twos` 2-labels in total; kInfinity when none can be valid.
  long lower_bound(std::size_t max_twos) const;

  // Full check of the complete labeling (only needed for n >= 3).
  bool leaf_valid() const;

  Labeling labeling() const;

 private:
  struct Frame {
    Vertex vertex;
    std::size_t sole_begin;
  };

  void Close(Vertex x, bool& ok);

  const Graph& graph_;
  int attack_n_;
  bool degree_bound_;
  std::vector<Vertex> order_;
  std::vector<std::int8_t> labels_;
  std::vector<std::uint32_t> open_count_;   // undecided neighbors
  std::vector<std::uint32_t> two_count_;    // 2-labeled neighbors
  std::vector<std::uint32_t> sole_count_;   // closed 0s seeing only this 2
  std::vector<Vertex> sole_log_;
  std::vector<Frame> frames_;
  std::size_t depth_ = 0;
  long weight_ = 0;
  std::size_t zeros_ = 0;
  std::size_t twos_ = 0;
  long two_capacity_ = 0;
  // For each depth: capacity contributions (deg+1, or deg when n == 1) of the
  // undecided vertices, sorted descending, as prefix sums.
  std::vector<std::vector<long>> capacity_prefix_;
};

// Descending degree, ties by internal id.
std::vector<Vertex> degree_order(const Graph& g);
std::vector<Vertex> identity_order(const Graph& g);

}  // namespace rdom::internal

#endif  // RDOM_SRC_SEARCH_HPP_
