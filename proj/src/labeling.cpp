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

#include "rdom/labeling.hpp"

#include <algorithm>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {
namespace {

void CheckLabel(int label) {
  if (label < 0 || label > 2)
    throw Error(ErrorCode::kLabelMismatch,
                "label " + std::to_string(label) + " outside {0,1,2}");
}

VertexSet LabelClass(const Labeling& f, std::size_t order, int label) {
  VertexSet s(order);
  for (Vertex v = 0; v < f.size(); ++v)
    if (f[v] == label) s.insert(v);
  return s;
}

// Visits the k-subsets of `pool` in lexicographic order; stops when `visit`
// returns true and reports whether it did.
template <typename Visit>
bool ForEachSubset(const std::vector<Vertex>& pool, std::size_t k,
                   std::vector<Vertex>& current, std::size_t start,
                   Visit&& visit) {
  if (current.size() == k) return visit(current);
  for (std::size_t i = start; i + (k - current.size()) <= pool.size(); ++i) {
    current.push_back(pool[i]);
    if (ForEachSubset(pool, k, current, i + 1, visit)) return true;
    current.pop_back();
  }
  return false;
}

ValidationReport Fail(int attack_n, std::vector<Vertex> witness) {
  return ValidationReport{false, attack_n, std::move(witness)};
}

}  // namespace

Labeling::Labeling(std::vector<int> labels) {
  labels_.reserve(labels.size());
  for (int label : labels) {
    CheckLabel(label);
    labels_.push_back(static_cast<std::uint8_t>(label));
  }
}

Labeling Labeling::Uniform(std::size_t order, int label) {
  return Labeling(std::vector<int>(order, label));
}

void Labeling::set(Vertex v, int label) {
  CheckLabel(label);
  labels_[v] = static_cast<std::uint8_t>(label);
}

void Labeling::check_fits(const Graph& g) const {
  if (labels_.size() != g.order())
    throw Error(ErrorCode::kLabelMismatch,
                "labeling has " + std::to_string(labels_.size()) +
                    " entries for a graph of order " +
                    std::to_string(g.order()));
}

long weight(const Labeling& f) {
  long w = 0;
  for (auto label : f.values()) w += label;
  return w;
}

std::size_t count_twos(const Labeling& f) {
  return static_cast<std::size_t>(
      std::count(f.values().begin(), f.values().end(), 2));
}

Partition partition(const Graph& g, const Labeling& f) {
  f.check_fits(g);
  return {LabelClass(f, g.order(), 0), LabelClass(f, g.order(), 1),
          LabelClass(f, g.order(), 2)};
}

VertexSet epn_set(const Graph& g, const Labeling& f) {
  auto parts = partition(g, f);
  VertexSet out(g.order());
  for (Vertex v : parts.zeros)
    if (g.neighbors(v).intersection_size(parts.twos) == 1) out.insert(v);
  return out;
}

VertexSet public_set(const Graph& g, const Labeling& f) {
  auto parts = partition(g, f);
  VertexSet out(g.order());
  for (Vertex v : parts.zeros)
    if (g.neighbors(v).intersection_size(parts.twos) >= 2) out.insert(v);
  return out;
}

bool is_violation(const Graph& g, const Labeling& f,
                  const std::vector<Vertex>& zero_set) {
  VertexSet s(g.order());
  for (Vertex v : zero_set) s.insert(v);
  auto twos = LabelClass(f, g.order(), 2);
  return open_neighborhood(g, s).intersection_size(twos) < zero_set.size();
}

ValidationReport validate_by_enumeration(const Graph& g, const Labeling& f,
                                         int attack_n) {
  f.check_fits(g);
  if (attack_n < 1)
    throw Error(ErrorCode::kInvalidOptions, "attack count must be >= 1");
  auto zeros = LabelClass(f, g.order(), 0).to_vector();
  std::vector<Vertex> current;
  std::vector<Vertex> witness;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(attack_n); ++k) {
    if (k > zeros.size()) break;
    current.clear();
    bool found = ForEachSubset(zeros, k, current, 0, [&](const auto& s) {
      if (!is_violation(g, f, s)) return false;
      witness = s;
      return true;
    });
    if (found) return Fail(attack_n, std::move(witness));
  }
  return ValidationReport{true, attack_n, {}};
}

ValidationReport validate(const Graph& g, const Labeling& f, int attack_n) {
  f.check_fits(g);
  if (attack_n < 1)
    throw Error(ErrorCode::kInvalidOptions, "attack count must be >= 1");
  if (attack_n > 2) return validate_by_enumeration(g, f, attack_n);

  auto twos = LabelClass(f, g.order(), 2);
  // Per 2-labeled vertex, the first two 0-vertices that see only it.
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<std::pair<Vertex, Vertex>> sole(g.order(), {kNone, kNone});
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    const VertexSet& nbrs = g.neighbors(v);
    std::size_t seen = nbrs.intersection_size(twos);
    if (seen == 0) return Fail(attack_n, {v});
    if (seen == 1 && attack_n == 2) {
      Vertex u = *(nbrs & twos).begin();
      auto& slot = sole[u];
      if (slot.first == kNone)
        slot.first = v;
      else if (slot.second == kNone)
        slot.second = v;
    }
  }
  if (attack_n == 2) {
    std::vector<Vertex> best;
    for (const auto& [a, b] : sole) {
      if (b == kNone) continue;
      if (best.empty() || std::make_pair(a, b) < std::make_pair(best[0], best[1]))
        best = {a, b};
    }
    if (!best.empty()) return Fail(attack_n, std::move(best));
  }
  return ValidationReport{true, attack_n, {}};
}

}  // namespace rdom
