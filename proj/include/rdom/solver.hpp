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

#ifndef RDOM_SOLVER_HPP_
#define RDOM_SOLVER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"

namespace rdom {

enum class TwoMode { kAny, kMinimizeTwos, kMaximizeTwos };
enum class Method { kBruteforce, kEccd, kAuto };

std::string_view to_string(TwoMode mode);
std::string_view to_string(Method method);

// Largest orders accepted by the exhaustive routines. These are configuration
// knobs, not complexity claims.
struct ExhaustiveLimits {
  std::size_t max_order = 24;
  std::size_t max_enumeration_order = 16;
};

// Defaults, with both limits replaced by TWO_RD_MAX_ORDER when it is set to a
// positive integer.
ExhaustiveLimits limits_from_environment();

struct SolveOptions {
  int attack_n = 2;
  std::optional<std::size_t> max_twos;
  TwoMode two_mode = TwoMode::kAny;
  Method method = Method::kAuto;
  bool enumerate_all = false;
  // Worker threads for the weight-minimizing pass of the branch and bound.
  std::size_t threads = 1;
  ExhaustiveLimits limits;
  // `auto` picks the path-packing route while the P5 candidate count stays
  // below this.
  std::size_t auto_candidate_threshold = 250000;
  // Prune with the counting bound |V0| <= Σ_{v∈V2} (deg v + 1) / 2.
  bool degree_bound_pruning = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  long gamma = 0;
  // Minimum labeling. From the branch and bound this is the lexicographically
  // smallest label vector among the admissible minimum labelings.
  Labeling labeling;
  std::optional<std::vector<Labeling>> all_minimum;
  // Distinct |V2| values over all_minimum, ascending.
  std::optional<std::vector<std::size_t>> feasible_two_counts;
  long optimal_number = 0;
  Method method_used = Method::kBruteforce;
  SearchStats stats;
};

// Exact minimum by depth-first branch and bound over per-vertex labels.
// Honors attack_n, max_twos, two_mode and enumerate_all; ignores `method`.
// Throws Error{kTooLarge} above limits.max_order (or max_enumeration_order
// when enumerate_all is set).
SolveResult gamma_bruteforce(const Graph& g, const SolveOptions& opts = {});

// Every minimum-weight valid labeling, in lexicographic order of label vectors.
std::vector<Labeling> enumerate_minimum_labelings(
    const Graph& g, int attack_n = 2, const ExhaustiveLimits& limits = {});

// Minimum weight subject to |V2| <= max_twos (attack n = 2).
SolveResult solve_finite_resources(const Graph& g, std::size_t max_twos,
                                   const ExhaustiveLimits& limits = {});

// Among minimum labelings, one with the fewest (or most) 2-labels. With
// enumerate_all, also fills all_minimum and feasible_two_counts.
SolveResult two_extremal_minimum(const Graph& g, TwoMode mode,
                                 bool enumerate_all = false,
                                 const ExhaustiveLimits& limits = {});

// Front door used by the CLI: dispatches on opts.method. The path-packing
// route only applies to attack_n == 2 without 2-label constraints; `auto`
// falls back to the branch and bound otherwise.
SolveResult solve(const Graph& g, const SolveOptions& opts = {});

}  // namespace rdom

#endif  // RDOM_SOLVER_HPP_
