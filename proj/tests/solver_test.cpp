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
#include <cstdlib>
#include <random>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rdom/eccd.hpp"
#include "rdom/errors.hpp"
#include "rdom/families.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace rdom {
namespace {

using ::rdom::testing::load_fixture;
using ::testing::Contains;
using ::testing::ElementsAre;

std::vector<int> as_vector(const Labeling& f) {
  return std::vector<int>(f.values().begin(), f.values().end());
}

std::vector<std::vector<int>> as_vectors(const std::vector<Labeling>& fs) {
  std::vector<std::vector<int>> out;
  for (const Labeling& f : fs) out.push_back(as_vector(f));
  return out;
}

void expect_sound(const Graph& g, const SolveResult& r, int attack = 2) {
  EXPECT_EQ(weight(r.labeling), r.gamma);
  EXPECT_TRUE(validate(g, r.labeling, attack).valid);
  EXPECT_EQ(r.optimal_number, static_cast<long>(g.order()) - r.gamma);
}

TEST(GammaBruteforceTest, Examples) {
  EXPECT_EQ(gamma_bruteforce(generate(FamilySpec::Complete(4))).gamma, 4);
  EXPECT_EQ(gamma_bruteforce(generate(FamilySpec::Complete(3))).gamma, 3);
  EXPECT_EQ(gamma_bruteforce(generate(FamilySpec::Star(4))).gamma, 5);
  Graph c17 = generate(FamilySpec::Cycle(17));
  SolveResult r = gamma_bruteforce(c17);
  EXPECT_EQ(r.gamma, 14);
  expect_sound(c17, r);
  EXPECT_EQ(gamma_bruteforce(build_graph(0, {})).gamma, 0);
}

TEST(GammaBruteforceTest, MatchesOracleOnSmallCorpus) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    auto oracle = testing::oracle_solve(g);
    SolveResult r = gamma_bruteforce(g);
    ASSERT_EQ(r.gamma, oracle.gamma);
    expect_sound(g, r);
    // Ties go to the lexicographically smallest label vector.
    EXPECT_EQ(as_vector(r.labeling), oracle.minimum.front());
  }
}

TEST(GammaBruteforceTest, OtherAttackCountsMatchOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_graph(2 + trial % 7, 0.5, rng());
    for (int attack : {1, 3}) {
      SolveOptions opts;
      opts.attack_n = attack;
      SolveResult r = gamma_bruteforce(g, opts);
      ASSERT_EQ(r.gamma, testing::oracle_solve(g, attack).gamma);
      expect_sound(g, r, attack);
    }
  }
}

TEST(GammaBruteforceTest, PruningAndThreadsDoNotChangeResult) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testing::random_graph(12 + trial % 4, 0.3, rng());
    SolveResult base = gamma_bruteforce(g);
    SolveOptions plain;
    plain.degree_bound_pruning = false;
    SolveOptions parallel;
    parallel.threads = 4;
    for (const SolveOptions& opts : {plain, parallel}) {
      SolveResult r = gamma_bruteforce(g, opts);
      EXPECT_EQ(r.gamma, base.gamma);
      EXPECT_EQ(r.labeling, base.labeling);
    }
  }
}

TEST(GammaBruteforceTest, LimitsAndOptions) {
  Graph c25 = generate(FamilySpec::Cycle(25));
  EXPECT_THROW(gamma_bruteforce(c25), Error);
  SolveOptions bad;
  bad.attack_n = 0;
  EXPECT_THROW(gamma_bruteforce(generate(FamilySpec::Path(3)), bad), Error);
  ExhaustiveLimits small{5, 5};
  EXPECT_THROW(enumerate_minimum_labelings(generate(FamilySpec::Path(6)), 2, small),
               Error);
}

TEST(GammaBruteforceTest, EnvironmentOverridesLimits) {
  ::setenv("TWO_RD_MAX_ORDER", "9", 1);
  ExhaustiveLimits limits = limits_from_environment();
  ::unsetenv("TWO_RD_MAX_ORDER");
  EXPECT_EQ(limits.max_order, 9u);
  EXPECT_EQ(limits.max_enumeration_order, 9u);
  EXPECT_EQ(limits_from_environment().max_order, ExhaustiveLimits{}.max_order);
}

TEST(EnumerateMinimumTest, PathOnFourVertices) {
  Graph p4 = generate(FamilySpec::Path(4));
  auto all = as_vectors(enumerate_minimum_labelings(p4));
  EXPECT_THAT(all, Contains(std::vector<int>{1, 1, 1, 1}));
  EXPECT_THAT(all, Contains(std::vector<int>{0, 2, 1, 1}));
  EXPECT_THAT(all, Contains(std::vector<int>{1, 1, 2, 0}));
  EXPECT_THAT(all, Contains(std::vector<int>{2, 0, 2, 0}));
  EXPECT_THAT(all, Contains(std::vector<int>{0, 2, 0, 2}));
  EXPECT_EQ(all, testing::oracle_solve(p4).minimum);
}

TEST(EnumerateMinimumTest, HubLabelingOfK26) {
  auto k26 = load_fixture("k2_6.txt");
  auto all = enumerate_minimum_labelings(k26.graph);
  EXPECT_THAT(all, Contains(*k26.labeling));
}

TEST(EnumerateMinimumTest, SingleVertex) {
  auto all = as_vectors(enumerate_minimum_labelings(build_graph(1, {})));
  EXPECT_THAT(all, ElementsAre(std::vector<int>{1}));
}

TEST(EnumerateMinimumTest, MatchesOracleExactly) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testing::random_graph(1 + trial % 8, 0.45, rng());
    auto all = enumerate_minimum_labelings(g);
    ASSERT_EQ(as_vectors(all), testing::oracle_solve(g).minimum);
  }
}

TEST(FiniteResourcesTest, K6) {
  Graph k6 = generate(FamilySpec::Complete(6));
  EXPECT_EQ(solve_finite_resources(k6, 0).gamma, 6);
  EXPECT_EQ(solve_finite_resources(k6, 1).gamma, 6);
  EXPECT_EQ(solve_finite_resources(k6, 2).gamma, 4);
  // Independent check of k = 1: the oracle under the same cap.
  EXPECT_EQ(testing::oracle_solve(k6, 2, 1).gamma, 6);
}

TEST(FiniteResourcesTest, MatchesOracleAndIsMonotone) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(2 + trial % 7, 0.5, rng());
    long previous = static_cast<long>(g.order()) + 1;
    for (std::size_t k = 0; k <= g.order(); ++k) {
      SolveResult r = solve_finite_resources(g, k);
      ASSERT_EQ(r.gamma, testing::oracle_solve(g, 2, k).gamma);
      EXPECT_LE(count_twos(r.labeling), k);
      expect_sound(g, r);
      EXPECT_LE(r.gamma, previous);
      previous = r.gamma;
    }
    EXPECT_EQ(previous, gamma_bruteforce(g).gamma);
  }
}

TEST(TwoExtremalTest, PathOnFourVertices) {
  Graph p4 = generate(FamilySpec::Path(4));
  SolveResult lo = two_extremal_minimum(p4, TwoMode::kMinimizeTwos);
  SolveResult hi = two_extremal_minimum(p4, TwoMode::kMaximizeTwos);
  EXPECT_EQ(lo.gamma, 4);
  EXPECT_EQ(hi.gamma, 4);
  EXPECT_EQ(count_twos(lo.labeling), 0u);
  EXPECT_EQ(lo.labeling, Labeling({1, 1, 1, 1}));
  EXPECT_EQ(count_twos(hi.labeling), 2u);
  SolveResult all = two_extremal_minimum(p4, TwoMode::kAny, true);
  EXPECT_THAT(*all.feasible_two_counts, ElementsAre(0, 1, 2));
}

TEST(TwoExtremalTest, K66HasNoThreeTwoMinimum) {
  auto parsed = load_fixture("k6_6_two.txt");
  SolveResult r = two_extremal_minimum(parsed.graph, TwoMode::kMaximizeTwos, true);
  EXPECT_EQ(r.gamma, 8);
  EXPECT_THAT(*r.feasible_two_counts, ElementsAre(2, 4));
  EXPECT_EQ(count_twos(r.labeling), 4u);
  SolveResult lo = two_extremal_minimum(parsed.graph, TwoMode::kMinimizeTwos);
  EXPECT_EQ(count_twos(lo.labeling), 2u);
}

TEST(TwoExtremalTest, MatchesOracle) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_graph(2 + trial % 7, 0.5, rng());
    auto oracle = testing::oracle_solve(g);
    std::set<std::size_t> counts;
    for (const auto& labels : oracle.minimum)
      counts.insert(std::count(labels.begin(), labels.end(), 2));
    SolveResult lo = two_extremal_minimum(g, TwoMode::kMinimizeTwos, true);
    SolveResult hi = two_extremal_minimum(g, TwoMode::kMaximizeTwos);
    EXPECT_EQ(std::set<std::size_t>(lo.feasible_two_counts->begin(),
                                    lo.feasible_two_counts->end()),
              counts);
    EXPECT_EQ(count_twos(lo.labeling), *counts.begin());
    EXPECT_EQ(count_twos(hi.labeling), *counts.rbegin());
    expect_sound(g, lo);
    expect_sound(g, hi);
  }
}

TEST(SolveTest, MethodDispatch) {
  Graph c9 = generate(FamilySpec::Cycle(9));
  SolveOptions opts;
  opts.method = Method::kEccd;
  EXPECT_EQ(solve(c9, opts).method_used, Method::kEccd);
  opts.method = Method::kBruteforce;
  EXPECT_EQ(solve(c9, opts).method_used, Method::kBruteforce);
  opts.method = Method::kAuto;
  EXPECT_EQ(solve(c9, opts).method_used, Method::kEccd);
  opts.auto_candidate_threshold = 0;
  EXPECT_EQ(solve(c9, opts).method_used, Method::kBruteforce);

  SolveOptions three;
  three.attack_n = 3;
  EXPECT_EQ(solve(c9, three).method_used, Method::kBruteforce);
  three.method = Method::kEccd;
  EXPECT_THROW(solve(c9, three), Error);
  SolveOptions capped;
  capped.method = Method::kEccd;
  capped.max_twos = 1;
  EXPECT_THROW(solve(c9, capped), Error);
}

// Properties of minimum labelings, checked by enumeration on every connected
// graph of order <= 7.
TEST(MinimumLabelingPropertiesTest, Corpus) {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    auto all = enumerate_minimum_labelings(g);
    ASSERT_FALSE(all.empty());
    const long n = static_cast<long>(g.order());
    const long gamma = weight(all.front());
    const bool optimal = gamma < n;
    EXPECT_LE(gamma, n);
    // gamma * (Δ + 3) >= 4n, except on K1 where Δ = 0 and gamma = 1.
    const long delta = static_cast<long>(max_degree(g));
    if (delta == 0) {
      EXPECT_LT(gamma * (delta + 3), 4 * n);
    } else {
      EXPECT_GE(gamma * (delta + 3), 4 * n);
    }

    bool some_fewer_twos = false;
    std::set<long> differences;
    for (const Labeling& f : all) {
      Partition p = partition(g, f);
      some_fewer_twos |= p.twos.size() < p.zeros.size();
      differences.insert(static_cast<long>(p.zeros.size()) -
                         static_cast<long>(p.twos.size()));
      // Every 2 sees a 0.
      for (Vertex t : p.twos) EXPECT_TRUE(g.neighbors(t).intersects(p.zeros));
    }
    EXPECT_EQ(some_fewer_twos, optimal);
    if (optimal) {
      EXPECT_EQ(differences.size(), 1u);
      EXPECT_EQ(*differences.begin(), n - gamma);
    }
  }
}

}  // namespace
}  // namespace rdom
