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

#include "rdom/eccd.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {
namespace {

std::string PathString(const P5& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(p[i]);
  }
  return out;
}

bool Contains(const P5& p, Vertex v) {
  return std::find(p.begin(), p.end(), v) != p.end();
}

// (leaf, hub) appears as an end couple of q, leaf outermost.
bool HasEndCouple(const P5& q, Vertex leaf, Vertex hub) {
  return (q[0] == leaf && q[1] == hub) || (q[4] == leaf && q[3] == hub);
}

enum class Role : std::uint8_t { kFree, kCenter, kLeaf, kHub };

// Depth-first packing. Positions are visited in id order; at each position
// the vertex either becomes the center of one compatible candidate or is
// skipped, so every ECCD set is reached exactly once.
class Packer {
 public:
  explicit Packer(const Graph& g) : g_(g), by_center_(g.order()) {
    for (const P5& p : enumerate_p5_candidates(g)) by_center_[p[2]].push_back(p);
    role_.assign(g.order(), Role::kFree);
    partner_.assign(g.order(), 0);
  }

  EccdSet Run(std::uint64_t& nodes) {
    Search(0);
    nodes = nodes_;
    return EccdSet{best_};
  }

 private:
  // A couple is usable when both ends are free or it already exists as-is.
  int CoupleCost(Vertex leaf, Vertex hub) const {
    if (role_[leaf] == Role::kFree && role_[hub] == Role::kFree) return 1;
    if (role_[leaf] == Role::kLeaf && role_[hub] == Role::kHub &&
        partner_[leaf] == hub)
      return 0;
    return -1;
  }

  int Cost(const P5& p) const {
    if (role_[p[2]] != Role::kFree) return -1;
    int left = CoupleCost(p[0], p[1]);
    int right = CoupleCost(p[4], p[3]);
    if (left < 0 || right < 0) return -1;
    return left + right;
  }

  std::size_t UpperBound(Vertex position) const {
    std::size_t open = 0;
    for (Vertex v = position; v < g_.order(); ++v)
      if (role_[v] == Role::kFree && g_.degree(v) >= 2) ++open;
    // Every center lies outside the (at least two) couples.
    std::size_t couples = std::max<std::size_t>(hubs_, 2);
    std::size_t outside = g_.order() >= 2 * couples ? g_.order() - 2 * couples : 0;
    return std::min(chosen_.size() + open, outside);
  }

  void AddCouple(Vertex leaf, Vertex hub, std::vector<Vertex>& created) {
    if (role_[leaf] != Role::kFree) return;
    role_[leaf] = Role::kLeaf;
    role_[hub] = Role::kHub;
    partner_[leaf] = hub;
    partner_[hub] = leaf;
    ++hubs_;
    created.push_back(leaf);
  }

  void Search(Vertex position) {
    ++nodes_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (position == g_.order()) return;
    if (UpperBound(position) <= best_.size()) return;

    const auto& candidates = by_center_[position];
    if (role_[position] == Role::kFree && !candidates.empty()) {
      // Reuse existing couples first: cheaper paths leave more room.
      for (int want = 0; want <= 2; ++want) {
        for (const P5& p : candidates) {
          if (Cost(p) != want) continue;
          std::vector<Vertex> created;
          AddCouple(p[0], p[1], created);
          AddCouple(p[4], p[3], created);
          role_[p[2]] = Role::kCenter;
          chosen_.push_back(p);
          Search(position + 1);
          chosen_.pop_back();
          role_[p[2]] = Role::kFree;
          for (Vertex leaf : created) {
            role_[partner_[leaf]] = Role::kFree;
            role_[leaf] = Role::kFree;
            --hubs_;
          }
          if (UpperBound(position) <= best_.size()) return;
        }
      }
    }
    Search(position + 1);
  }

  const Graph& g_;
  std::vector<std::vector<P5>> by_center_;
  std::vector<Role> role_;
  std::vector<Vertex> partner_;
  std::size_t hubs_ = 0;
  std::vector<P5> chosen_;
  std::vector<P5> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EccdCheck check_eccd(const Graph& g, const EccdSet& s) {
  for (const P5& p : s.paths) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (p[i] >= g.order())
        return {false, "vertex out of range in " + PathString(p)};
      for (std::size_t j = 0; j < i; ++j)
        if (p[i] == p[j]) return {false, "repeated vertex in " + PathString(p)};
      if (i > 0 && !g.adjacent(p[i - 1], p[i]))
        return {false, "missing edge in " + PathString(p)};
    }
  }
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const P5& p = s.paths[i];
    for (std::size_t j = 0; j < s.paths.size(); ++j) {
      if (i == j) continue;
      const P5& q = s.paths[j];
      if (Contains(q, p[2]))
        return {false, "center of " + PathString(p) + " used by " + PathString(q)};
      for (auto [leaf, hub] : {std::pair{p[0], p[1]}, std::pair{p[4], p[3]}}) {
        if ((Contains(q, leaf) || Contains(q, hub)) && !HasEndCouple(q, leaf, hub))
          return {false, "end couple " + std::to_string(leaf) + "-" +
                             std::to_string(hub) + " of " + PathString(p) +
                             " not an end couple of " + PathString(q)};
      }
    }
  }
  return {};
}

std::vector<P5> enumerate_p5_candidates(const Graph& g) {
  std::vector<P5> out;
  for (Vertex c = 0; c < g.order(); ++c) {
    auto around = g.neighbor_list(c);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        Vertex b = around[i];
        Vertex d = around[j];
        for (Vertex a : g.neighbor_list(b)) {
          if (a == c || a == d) continue;
          for (Vertex e : g.neighbor_list(d)) {
            if (e == a || e == b || e == c) continue;
            out.push_back({a, b, c, d, e});
          }
        }
      }
    }
  }
  return out;
}

std::size_t count_p5_candidates(const Graph& g) {
  std::size_t total = 0;
  for (Vertex c = 0; c < g.order(); ++c) {
    auto around = g.neighbor_list(c);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        Vertex b = around[i];
        Vertex d = around[j];
        VertexSet leaves = g.neighbors(b);
        leaves.erase(c);
        leaves.erase(d);
        VertexSet ends = g.neighbors(d);
        ends.erase(b);
        ends.erase(c);
        total += leaves.size() * ends.size() - leaves.intersection_size(ends);
      }
    }
  }
  return total;
}

EccdSet max_eccd(const Graph& g, SearchStats* stats) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t nodes = 0;
  EccdSet best = Packer(g).Run(nodes);
  if (stats) {
    stats->nodes = nodes;
    stats->elapsed = std::chrono::steady_clock::now() - start;
  }
  return best;
}

Labeling eccd_to_labeling(const Graph& g, const EccdSet& s) {
  if (auto check = check_eccd(g, s); !check.ok)
    throw Error(ErrorCode::kInvalidEccd, check.reason);
  auto f = Labeling::Uniform(g.order(), 1);
  constexpr std::array<int, 5> kPattern = {0, 2, 0, 2, 0};
  for (const P5& p : s.paths)
    for (std::size_t i = 0; i < 5; ++i) f.set(p[i], kPattern[i]);
  return f;
}

SolveResult gamma_via_eccd(const Graph& g) {
  SolveResult result;
  EccdSet best = max_eccd(g, &result.stats);
  result.method_used = Method::kEccd;
  result.optimal_number = static_cast<long>(best.size());
  result.gamma = static_cast<long>(g.order()) - result.optimal_number;
  result.labeling = eccd_to_labeling(g, best);
  return result;
}

OptimalityVerdict is_optimal(const Graph& g) {
  EccdSet best = max_eccd(g);
  OptimalityVerdict verdict;
  verdict.optimal = best.size() > 0;
  verdict.optimal_number = static_cast<long>(best.size());
  verdict.witness = eccd_to_labeling(g, best);
  if (verdict.optimal) verdict.certificate = best.paths.front();
  return verdict;
}

}  // namespace rdom
