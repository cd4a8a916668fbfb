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

#ifndef RDOM_LABELING_HPP_
#define RDOM_LABELING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/vertex_set.hpp"

namespace rdom {

// Assignment of 0, 1 or 2 to each vertex of a graph, indexed by internal id.
// Values outside {0,1,2} are rejected here so that validation stays total.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> labels);
  Labeling(std::initializer_list<int> labels)
      : Labeling(std::vector<int>(labels)) {}

  static Labeling Uniform(std::size_t order, int label);

  std::size_t size() const { return labels_.size(); }
  int operator[](Vertex v) const { return labels_[v]; }
  void set(Vertex v, int label);
  const std::vector<std::uint8_t>& values() const { return labels_; }

  // Throws Error{kLabelMismatch} if this labeling is not sized for g.
  void check_fits(const Graph& g) const;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

struct Partition {
  VertexSet zeros;
  VertexSet ones;
  VertexSet twos;
};

// Σ f(v).
long weight(const Labeling& f);

// Number of vertices labeled 2.
std::size_t count_twos(const Labeling& f);

Partition partition(const Graph& g, const Labeling& f);

// 0-labeled vertices with exactly one 2-labeled neighbor.
VertexSet epn_set(const Graph& g, const Labeling& f);

// 0-labeled vertices with two or more 2-labeled neighbors.
VertexSet public_set(const Graph& g, const Labeling& f);

struct ValidationReport {
  bool valid = true;
  int attack_n = 0;
  // On failure: a set S of 0-labeled vertices, |S| <= attack_n, whose open
  // neighborhood holds fewer than |S| vertices labeled 2. Sorted ascending.
  std::vector<Vertex> witness;
};

// n-attack check. Subsets are examined by size, then lexicographically, and
// the first violating one is reported. n = 1 and n = 2 use direct
// characterizations; larger n enumerates subsets of V0.
ValidationReport validate(const Graph& g, const Labeling& f, int attack_n);

// The defining subset enumeration for every n (no fast path). Exponential in
// n; exposed so the fast paths can be cross-checked.
ValidationReport validate_by_enumeration(const Graph& g, const Labeling& f,
                                         int attack_n);

// True iff |N(S) ∩ V2| < |S| for the 0-labeled set S.
bool is_violation(const Graph& g, const Labeling& f,
                  const std::vector<Vertex>& zero_set);

}  // namespace rdom

#endif  // RDOM_LABELING_HPP_
