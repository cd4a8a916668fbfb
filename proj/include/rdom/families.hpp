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

#ifndef RDOM_FAMILIES_HPP_
#define RDOM_FAMILIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "rdom/graph.hpp"
#include "rdom/solver.hpp"

namespace rdom {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);

enum class FamilyKind { kPath, kCycle, kComplete, kStar, kCompleteBipartite, kGrid };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  // path/cycle/complete/star: {n}; complete_bipartite: {a, b};
  // grid: {rows, cols}.
  std::vector<std::size_t> sizes;

  static FamilySpec Path(std::size_t n) { return {FamilyKind::kPath, {n}}; }
  static FamilySpec Cycle(std::size_t n) { return {FamilyKind::kCycle, {n}}; }
  static FamilySpec Complete(std::size_t n) { return {FamilyKind::kComplete, {n}}; }
  // K_{1,n}.
  static FamilySpec Star(std::size_t n) { return {FamilyKind::kStar, {n}}; }
  static FamilySpec CompleteBipartite(std::size_t a, std::size_t b) {
    return {FamilyKind::kCompleteBipartite, {a, b}};
  }
  static FamilySpec Grid(std::size_t rows, std::size_t cols) {
    return {FamilyKind::kGrid, {rows, cols}};
  }
};

std::string_view to_string(FamilyKind kind);
// Accepts the names printed by to_string plus "bipartite".
std::optional<FamilyKind> parse_family_kind(std::string_view name);

// Throws Error{kBadSpec} for wrong arity, zero sizes, or cycles below 3.
void check_spec(const FamilySpec& spec);

// Standard numbering: paths and cycles in order, the star center first,
// bipartite part A then part B, grids row-major.
Graph generate(const FamilySpec& spec);

// Closed form for gamma_2R, or nullopt when none is known (grids, general
// complete bipartite graphs).
//   K_n: n for n < 4, else 4.   K_{1,n}: n + 1.
//   P_n, C_n: n - floor(n/5).   K_{2,n}, n >= 2: 4.
std::optional<long> gamma_formula(const FamilySpec& spec);

// Sierpinski triangle graph of the given iteration (0 is a triangle).
Graph sierpinski_triangle(std::size_t iteration);

// gamma_2R(G) / |V(G)| in lowest terms. Throws Error{kEmptyGraph} on order 0.
Rational density(const Graph& g, const SolveOptions& opts = {});

// 4 / (max_degree + 3).
Rational density_lower_bound(std::size_t max_degree);

}  // namespace rdom

#endif  // RDOM_FAMILIES_HPP_
