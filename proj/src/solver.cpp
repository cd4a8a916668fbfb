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

#include "rdom/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "rdom/eccd.hpp"
#include "rdom/errors.hpp"
#include "search.hpp"

namespace rdom {

using internal::kInfinity;
using internal::kNoCap;
using internal::LabelState;

std::string_view to_string(TwoMode mode) {
  switch (mode) {
    case TwoMode::kAny: return "any";
    case TwoMode::kMinimizeTwos: return "min";
    case TwoMode::kMaximizeTwos: return "max";
  }
  return "any";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kBruteforce: return "bruteforce";
    case Method::kEccd: return "eccd";
    case Method::kAuto: return "auto";
  }
  return "auto";
}

ExhaustiveLimits limits_from_environment() {
  ExhaustiveLimits limits;
  if (const char* env = std::getenv("TWO_RD_MAX_ORDER")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      limits.max_order = static_cast<std::size_t>(value);
      limits.max_enumeration_order = static_cast<std::size_t>(value);
    }
  }
  return limits;
}

namespace {

constexpr std::array<int, 3> kDegreeLabelOrder = {0, 2, 1};
constexpr std::array<int, 3> kLexLabelOrder = {0, 1, 2};

template <typename Visitor>
void Explore(LabelState& s, Visitor& visitor, const std::array<int, 3>& labels) {
  ++visitor.nodes;
  if (s.complete()) {
    if (s.leaf_valid()) visitor.Leaf(s);
    return;
  }
  for (int label : labels) {
    if (label == 2 && s.twos() >= visitor.TwoCap()) continue;
    if (s.push(label) && !visitor.Prune(s)) Explore(s, visitor, labels);
    s.pop();
    if (visitor.stop) return;
  }
}

// Weight minimization under a cap on 2-labels; the best bound may be shared
// between workers.
struct MinWeightVisitor {
  std::atomic<long>& best;
  std::size_t cap;
  std::uint64_t nodes = 0;
  bool stop = false;

  std::size_t TwoCap() const { return cap; }
  bool Prune(const LabelState& s) const {
    return s.lower_bound(cap) >= best.load(std::memory_order_relaxed);
  }
  void Leaf(const LabelState& s) {
    long current = best.load(std::memory_order_relaxed);
    while (s.weight() < current &&
           !best.compare_exchange_weak(current, s.weight())) {
    }
  }
};

// Among labelings of weight exactly `gamma`, the fewest or most 2-labels.
struct ExtremalTwosVisitor {
  long gamma;
  std::size_t cap;
  bool maximize;
  long best = -1;
  std::uint64_t nodes = 0;
  bool stop = false;

  std::size_t TwoCap() const {
    if (maximize || best <= 0) return cap;
    return std::min(cap, static_cast<std::size_t>(best - 1));
  }
  bool Prune(const LabelState& s) const {
    if (!maximize && best == 0) return true;
    if (s.lower_bound(TwoCap()) > gamma) return true;
    if (maximize && best >= 0) {
      long reachable = static_cast<long>(s.twos()) +
                       std::min(static_cast<long>(s.undecided()),
                                (gamma - s.weight()) / 2);
      if (reachable <= best) return true;
    }
    return false;
  }
  void Leaf(const LabelState& s) {
    if (s.weight() != gamma) return;
    long twos = static_cast<long>(s.twos());
    if (best < 0 || (maximize ? twos > best : twos < best)) best = twos;
  }
};

// First labeling of weight `gamma` (optionally with exactly `target` 2s) in
// the exploration order.
struct FirstLeafVisitor {
  long gamma;
  std::size_t cap;
  std::optional<std::size_t> target;
  std::optional<Labeling> found{};
  std::uint64_t nodes = 0;
  bool stop = false;

  std::size_t TwoCap() const { return target ? std::min(cap, *target) : cap; }
  bool Prune(const LabelState& s) const {
    if (s.lower_bound(TwoCap()) > gamma) return true;
    if (target) {
      std::size_t reachable =
          s.twos() + std::min<std::size_t>(
                         s.undecided(),
                         static_cast<std::size_t>((gamma - s.weight()) / 2));
      if (reachable < *target) return true;
    }
    return false;
  }
  void Leaf(const LabelState& s) {
    if (s.weight() != gamma) return;
    if (target && s.twos() != *target) return;
    found = s.labeling();
    stop = true;
  }
};

struct CollectVisitor {
  long gamma;
  std::size_t cap;
  std::vector<Labeling> found{};
  std::uint64_t nodes = 0;
  bool stop = false;

  std::size_t TwoCap() const { return cap; }
  bool Prune(const LabelState& s) const { return s.lower_bound(cap) > gamma; }
  void Leaf(const LabelState& s) {
    if (s.weight() == gamma) found.push_back(s.labeling());
  }
};

// Label prefixes (in degree order) of the first `depth` vertices that do not
// already break a constraint; the units of parallel work.
void CollectPrefixes(LabelState& s, std::size_t depth, std::size_t cap,
                     std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (s.depth() == depth || s.complete()) {
    out.push_back(current);
    return;
  }
  for (int label : kDegreeLabelOrder) {
    if (label == 2 && s.twos() >= cap) continue;
    current.push_back(label);
    if (s.push(label)) CollectPrefixes(s, depth, cap, current, out);
    s.pop();
    current.pop_back();
  }
}

long MinimizeWeight(const Graph& g, const SolveOptions& opts, std::size_t cap,
                    std::uint64_t& nodes) {
  // The all-1 labeling is always valid and uses no 2s.
  std::atomic<long> best{static_cast<long>(g.order())};
  auto order = internal::degree_order(g);
  std::size_t threads = std::max<std::size_t>(1, opts.threads);
  if (threads == 1 || g.order() < 12) {
    LabelState state(g, opts.attack_n, order, opts.degree_bound_pruning);
    MinWeightVisitor visitor{best, cap};
    if (!visitor.Prune(state)) Explore(state, visitor, kDegreeLabelOrder);
    nodes += visitor.nodes;
    return best.load();
  }

  std::vector<std::vector<int>> prefixes;
  {
    LabelState state(g, opts.attack_n, order, opts.degree_bound_pruning);
    std::vector<int> current;
    std::size_t depth = 1;
    std::size_t tasks = 3;
    while (tasks < 8 * threads && depth < g.order() / 2) {
      ++depth;
      tasks *= 3;
    }
    CollectPrefixes(state, depth, cap, current, prefixes);
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total_nodes{0};
  auto worker = [&] {
    LabelState state(g, opts.attack_n, order, opts.degree_bound_pruning);
    MinWeightVisitor visitor{best, cap};
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      bool ok = true;
      for (int label : prefixes[i]) ok = state.push(label) && ok;
      if (ok && !visitor.Prune(state)) Explore(state, visitor, kDegreeLabelOrder);
      for (std::size_t k = 0; k < prefixes[i].size(); ++k) state.pop();
    }
    total_nodes += visitor.nodes;
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  nodes += total_nodes.load();
  return best.load();
}

void CheckOptions(const SolveOptions& opts) {
  if (opts.attack_n < 1)
    throw Error(ErrorCode::kInvalidOptions, "attack count must be >= 1");
}

bool Unconstrained(const SolveOptions& opts) {
  return !opts.max_twos && opts.two_mode == TwoMode::kAny &&
         !opts.enumerate_all;
}

}  // namespace

SolveResult gamma_bruteforce(const Graph& g, const SolveOptions& opts) {
  CheckOptions(opts);
  if (g.order() > opts.limits.max_order)
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(g.order()) +
                    " exceeds the exhaustive limit " +
                    std::to_string(opts.limits.max_order));
  if (opts.enumerate_all && g.order() > opts.limits.max_enumeration_order)
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(g.order()) +
                    " exceeds the enumeration limit " +
                    std::to_string(opts.limits.max_enumeration_order));
  auto start = std::chrono::steady_clock::now();
  const std::size_t cap = opts.max_twos.value_or(kNoCap);

  SolveResult result;
  result.method_used = Method::kBruteforce;
  result.gamma = MinimizeWeight(g, opts, cap, result.stats.nodes);

  std::optional<std::size_t> target;
  if (opts.two_mode != TwoMode::kAny) {
    LabelState state(g, opts.attack_n, internal::degree_order(g),
                     opts.degree_bound_pruning);
    ExtremalTwosVisitor visitor{result.gamma, cap,
                                opts.two_mode == TwoMode::kMaximizeTwos};
    Explore(state, visitor, kDegreeLabelOrder);
    result.stats.nodes += visitor.nodes;
    target = static_cast<std::size_t>(visitor.best);
  }

  if (opts.enumerate_all) {
    LabelState state(g, opts.attack_n, internal::identity_order(g),
                     opts.degree_bound_pruning);
    CollectVisitor visitor{result.gamma, cap};
    Explore(state, visitor, kLexLabelOrder);
    result.stats.nodes += visitor.nodes;
    std::set<std::size_t> counts;
    for (const auto& f : visitor.found) counts.insert(count_twos(f));
    result.feasible_two_counts.emplace(counts.begin(), counts.end());
    result.all_minimum = std::move(visitor.found);
  }

  {
    LabelState state(g, opts.attack_n, internal::identity_order(g),
                     opts.degree_bound_pruning);
    FirstLeafVisitor visitor{result.gamma, cap, target};
    Explore(state, visitor, kLexLabelOrder);
    result.stats.nodes += visitor.nodes;
    result.labeling = std::move(*visitor.found);
  }

  result.optimal_number = static_cast<long>(g.order()) - result.gamma;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<Labeling> enumerate_minimum_labelings(const Graph& g, int attack_n,
                                                  const ExhaustiveLimits& limits) {
  SolveOptions opts;
  opts.attack_n = attack_n;
  opts.enumerate_all = true;
  opts.limits = limits;
  return std::move(*gamma_bruteforce(g, opts).all_minimum);
}

SolveResult solve_finite_resources(const Graph& g, std::size_t max_twos,
                                   const ExhaustiveLimits& limits) {
  SolveOptions opts;
  opts.max_twos = max_twos;
  opts.limits = limits;
  return gamma_bruteforce(g, opts);
}

SolveResult two_extremal_minimum(const Graph& g, TwoMode mode,
                                 bool enumerate_all,
                                 const ExhaustiveLimits& limits) {
  SolveOptions opts;
  opts.two_mode = mode;
  opts.enumerate_all = enumerate_all;
  opts.limits = limits;
  return gamma_bruteforce(g, opts);
}

SolveResult solve(const Graph& g, const SolveOptions& opts) {
  CheckOptions(opts);
  switch (opts.method) {
    case Method::kBruteforce:
      return gamma_bruteforce(g, opts);
    case Method::kEccd:
      if (opts.attack_n != 2)
        throw Error(ErrorCode::kInvalidOptions,
                    "the path-packing method requires attack n = 2");
      if (!Unconstrained(opts))
        throw Error(ErrorCode::kInvalidOptions,
                    "the path-packing method does not support 2-label "
                    "constraints or enumeration");
      return gamma_via_eccd(g);
    case Method::kAuto:
      if (opts.attack_n == 2 && Unconstrained(opts) &&
          count_p5_candidates(g) < opts.auto_candidate_threshold)
        return gamma_via_eccd(g);
      return gamma_bruteforce(g, opts);
  }
  return gamma_bruteforce(g, opts);
}

}  // namespace rdom
