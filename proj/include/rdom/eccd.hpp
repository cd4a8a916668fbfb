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

#ifndef RDOM_ECCD_HPP_
#define RDOM_ECCD_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"
#include "rdom/solver.hpp"

namespace rdom {

// Ordered path a-b-c-d-e. (a,b) and (e,d) are its end couples, with a and e
// the leaves; c is the center.
using P5 = std::array<Vertex, 5>;

// A collection of end-coupled center-disjoint P5 subgraphs:
//   * no center occurs anywhere in another path;
//   * a vertex of an end couple may occur in another path only as the same
//     couple, with the same leaf, at one of that path's ends.
struct EccdSet {
  std::vector<P5> paths;

  std::size_t size() const { return paths.size(); }
};

struct EccdCheck {
  bool ok = true;
  std::string reason;
};

// Checks the path and coupling conditions pairwise, straight from the
// definition.
EccdCheck check_eccd(const Graph& g, const EccdSet& s);

// All P5 paths, one orientation each (hub b < hub d), grouped by center in
// increasing order.
std::vector<P5> enumerate_p5_candidates(const Graph& g);

// Number of entries enumerate_p5_candidates would return, without building
// them.
std::size_t count_p5_candidates(const Graph& g);

// Maximum-cardinality ECCD set by exhaustive packing over P5 candidates.
EccdSet max_eccd(const Graph& g, SearchStats* stats = nullptr);

// Labels each path 0-2-0-2-0 and every other vertex 1.
// Throws Error{kInvalidEccd} if s fails check_eccd.
Labeling eccd_to_labeling(const Graph& g, const EccdSet& s);

// gamma = |V| - |max_eccd|, witnessed by the ECCD labeling.
SolveResult gamma_via_eccd(const Graph& g);

struct OptimalityVerdict {
  bool optimal = false;
  long optimal_number = 0;
  // A path labeled 0-2-0-2-0 by `witness` when the graph is optimal.
  std::optional<P5> certificate;
  Labeling witness;
};

// Optimal iff gamma_2R < |V|, i.e. iff some ECCD set is non-empty.
OptimalityVerdict is_optimal(const Graph& g);

}  // namespace rdom

#endif  // RDOM_ECCD_HPP_
