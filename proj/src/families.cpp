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

#include "rdom/families.hpp"

#include <map>
#include <utility>

#include "rdom/errors.hpp"

namespace rdom {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath: return "path";
    case FamilyKind::kCycle: return "cycle";
    case FamilyKind::kComplete: return "complete";
    case FamilyKind::kStar: return "star";
    case FamilyKind::kCompleteBipartite: return "complete_bipartite";
    case FamilyKind::kGrid: return "grid";
  }
  return "path";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  static const std::map<std::string_view, FamilyKind> kNames = {
      {"path", FamilyKind::kPath},
      {"cycle", FamilyKind::kCycle},
      {"complete", FamilyKind::kComplete},
      {"star", FamilyKind::kStar},
      {"complete_bipartite", FamilyKind::kCompleteBipartite},
      {"bipartite", FamilyKind::kCompleteBipartite},
      {"grid", FamilyKind::kGrid},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

void check_spec(const FamilySpec& spec) {
  std::size_t arity = (spec.kind == FamilyKind::kCompleteBipartite ||
                       spec.kind == FamilyKind::kGrid)
                          ? 2
                          : 1;
  std::string name(to_string(spec.kind));
  if (spec.sizes.size() != arity)
    throw Error(ErrorCode::kBadSpec, name + " takes " + std::to_string(arity) +
                                         " size parameter(s)");
  for (std::size_t s : spec.sizes)
    if (s == 0) throw Error(ErrorCode::kBadSpec, name + " sizes must be positive");
  if (spec.kind == FamilyKind::kCycle && spec.sizes[0] < 3)
    throw Error(ErrorCode::kBadSpec, "cycle needs at least 3 vertices");
}

Graph generate(const FamilySpec& spec) {
  check_spec(spec);
  std::vector<Edge> edges;
  std::size_t order = 0;
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle: {
      order = spec.sizes[0];
      for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
      if (spec.kind == FamilyKind::kCycle) edges.emplace_back(order - 1, 0);
      break;
    }
    case FamilyKind::kComplete: {
      order = spec.sizes[0];
      for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
      break;
    }
    case FamilyKind::kStar: {
      order = spec.sizes[0] + 1;
      for (Vertex v = 1; v < order; ++v) edges.emplace_back(0, v);
      break;
    }
    case FamilyKind::kCompleteBipartite: {
      std::size_t a = spec.sizes[0];
      std::size_t b = spec.sizes[1];
      order = a + b;
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < order; ++v) edges.emplace_back(u, v);
      break;
    }
    case FamilyKind::kGrid: {
      std::size_t rows = spec.sizes[0];
      std::size_t cols = spec.sizes[1];
      order = rows * cols;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          Vertex v = r * cols + c;
          if (c + 1 < cols) edges.emplace_back(v, v + 1);
          if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
      }
      break;
    }
  }
  return build_graph(order, edges);
}

std::optional<long> gamma_formula(const FamilySpec& spec) {
  check_spec(spec);
  auto n = static_cast<long>(spec.sizes[0]);
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return n < 4 ? n : 4;
    case FamilyKind::kStar:
      return n + 1;
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
      return n - n / 5;
    case FamilyKind::kCompleteBipartite: {
      auto a = static_cast<long>(spec.sizes[0]);
      auto b = static_cast<long>(spec.sizes[1]);
      if (a == 1 || b == 1) return std::max(a, b) + 1;  // a star
      if (a == 2 || b == 2) return 4;
      return std::nullopt;
    }
    case FamilyKind::kGrid:
      return std::nullopt;
  }
  return std::nullopt;
}

Graph sierpinski_triangle(std::size_t iteration) {
  // Corners of the upward unit triangles on a triangular lattice of side
  // 2^iteration, in (x, y) lattice coordinates.
  std::vector<std::pair<long, long>> corners = {{0, 0}};
  long side = 1;
  for (std::size_t i = 0; i < iteration; ++i) {
    std::vector<std::pair<long, long>> next;
    for (auto [x, y] : corners) {
      next.emplace_back(x, y);
      next.emplace_back(x + side, y);
      next.emplace_back(x, y + side);
    }
    corners = std::move(next);
    side *= 2;
  }
  std::map<std::pair<long, long>, Vertex> ids;
  auto id = [&](long x, long y) {
    auto [it, inserted] = ids.emplace(std::pair{x, y}, ids.size());
    return it->second;
  };
  std::vector<Edge> edges;
  for (auto [x, y] : corners) {
    Vertex a = id(x, y);
    Vertex b = id(x + 1, y);
    Vertex c = id(x, y + 1);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    edges.emplace_back(a, c);
  }
  return build_graph(ids.size(), edges);
}

Rational density(const Graph& g, const SolveOptions& opts) {
  if (g.order() == 0)
    throw Error(ErrorCode::kEmptyGraph, "density of the empty graph");
  long gamma = solve(g, opts).gamma;
  return Rational(gamma, static_cast<std::int64_t>(g.order()));
}

Rational density_lower_bound(std::size_t max_degree) {
  return Rational(4, static_cast<std::int64_t>(max_degree) + 3);
}

}  // namespace rdom
