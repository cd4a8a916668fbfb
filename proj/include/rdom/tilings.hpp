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

#ifndef RDOM_TILINGS_HPP_
#define RDOM_TILINGS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdom/families.hpp"
#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"
#include "rdom/solver.hpp"

namespace rdom {

// Vertices of every patch are numbered row-major: (x, y) -> y * width + x.
//
//   square:     (x, y) ~ (x+1, y), (x, y+1).
//   triangular: axial coordinates; (x, y) ~ (x+1, y), (x, y+1), (x+1, y+1).
//   hexagonal:  brick wall; (x, y) ~ (x+1, y) always, and (x, y) ~ (x, y+1)
//               when x + y is even.
enum class TilingKind { kSquare, kHexagonal, kTriangular };
enum class Wrap { kOpen, kTorus };

std::string_view to_string(TilingKind kind);
std::string_view to_string(Wrap wrap);
std::optional<TilingKind> parse_tiling_kind(std::string_view name);
std::optional<Wrap> parse_wrap(std::string_view name);

// Degree of every vertex in a torus patch: 4, 3 or 6.
std::size_t tiling_degree(TilingKind kind);

struct PatchSpec {
  TilingKind kind = TilingKind::kSquare;
  std::size_t width = 1;
  std::size_t height = 1;
  Wrap wrap = Wrap::kOpen;
};

// Throws Error{kBadSpec} on a zero dimension and Error{kIncompatibleTorus}
// when a torus would be degenerate: square and triangular need both sides
// >= 3; hexagonal needs an even width >= 4 and an even height >= 2.
void check_patch(const PatchSpec& spec);
Graph generate_patch(const PatchSpec& spec);

// A periodic labeling with a rectangular period. labels[dy * period_x + dx]
// is the label of every cell congruent to (dx, dy).
struct TilingPattern {
  TilingKind kind = TilingKind::kSquare;
  std::size_t period_x = 1;
  std::size_t period_y = 1;
  std::vector<int> labels;

  int at(std::size_t x, std::size_t y) const {
    return labels[(y % period_y) * period_x + x % period_x];
  }
  // Sum of labels over one period divided by the cells per period.
  Rational density() const;
};

// label(x, y) = row[(a*x + b*y) mod |row|].
TilingPattern linear_pattern(TilingKind kind, const std::vector<int>& row,
                             std::size_t a, std::size_t b);
TilingPattern uniform_pattern(TilingKind kind, int label);

// Throws Error{kBadSpec} when the table is malformed.
void check_pattern(const TilingPattern& pattern);

// Smallest torus that fits whole periods and satisfies check_patch.
PatchSpec minimal_torus(const TilingPattern& pattern);

// Row strings the search starts from.
extern const std::vector<int> kHexagonalRow;   // 0 0 0 2 2 0
extern const std::vector<int> kTriangularRow;  // 0 0 0 0 2 0 0 0 2

// Square: every labeling row[(x + a*y) mod 7] with label sum 4, rows in
// lexicographic order, a = 0..6. Hexagonal and triangular: the fixed row
// string laid along rows, then along columns, with shift 0..|row|-1. The
// first candidate that validates on its minimal torus and on the doubled
// torus wins. Returns nullopt if nothing validates.
std::optional<TilingPattern> search_pattern(TilingKind kind);

// search_pattern, computed once per kind. Throws Error{kBadSpec} if the
// search comes back empty.
const TilingPattern& standard_pattern(TilingKind kind);

// Throws Error{kBadSpec} on a kind mismatch and Error{kIncompatibleTorus}
// unless the patch is a torus made of whole periods.
Labeling pattern_labeling(const TilingPattern& pattern, const PatchSpec& patch);

struct PatternCheck {
  std::size_t width = 0;
  std::size_t height = 0;
  bool valid = false;
  Rational density;
  std::vector<Vertex> witness;
};

// One torus per (width, height), validated at n = 2.
std::vector<PatternCheck> verify_pattern(
    const TilingPattern& pattern,
    const std::vector<std::pair<std::size_t, std::size_t>>& sizes);

// "dx dy label" per residue, preceded by "# kind <name>" and
// "# period <px> <py>" lines.
std::string write_pattern_table(const TilingPattern& pattern);
// Throws ParseError on malformed lines and Error{kBadSpec} when residues are
// missing or repeated.
TilingPattern read_pattern_table(std::string_view text);

enum class BallKind { kPath, kSquare, kHexagonal, kTriangular };
std::optional<BallKind> parse_ball_kind(std::string_view name);

struct BallDensity {
  std::size_t radius = 0;
  std::size_t order = 0;
  Rational density;
};

// Densities of radius-r balls in the infinite path or lattice. Paths use the
// closed form on 2r+1 vertices; lattice balls are solved exactly, so large
// radii raise Error{kTooLarge}.
std::vector<BallDensity> ball_density_sequence(BallKind kind,
                                               const std::vector<std::size_t>& radii,
                                               const SolveOptions& opts = {});

// The radius-r ball around a central vertex of an open lattice patch.
Graph lattice_ball(TilingKind kind, std::size_t radius);

}  // namespace rdom

#endif  // RDOM_TILINGS_HPP_
