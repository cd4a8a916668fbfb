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

#include <algorithm>

#include "gtest/gtest.h"
#include "rdom/eccd.hpp"
#include "rdom/errors.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

namespace rdom {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kOutOfRange;
}

SolveResult brute(const Graph& g) {
  SolveOptions opts;
  opts.method = Method::kBruteforce;
  return solve(g, opts);
}

TEST(GenerateTest, Shapes) {
  Graph p5 = generate(FamilySpec::Path(5));
  EXPECT_EQ(p5.order(), 5u);
  EXPECT_EQ(p5.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));

  Graph c5 = generate(FamilySpec::Cycle(5));
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_TRUE(c5.adjacent(4, 0));

  Graph k26 = generate(FamilySpec::CompleteBipartite(2, 6));
  EXPECT_EQ(k26.order(), 8u);
  EXPECT_EQ(k26.edge_count(), 12u);
  EXPECT_FALSE(k26.adjacent(0, 1));
  EXPECT_TRUE(k26.adjacent(1, 7));
  EXPECT_FALSE(k26.adjacent(2, 3));

  Graph star = generate(FamilySpec::Star(4));
  EXPECT_EQ(star.degree(0), 4u);
  EXPECT_EQ(star.edge_count(), 4u);

  Graph grid = generate(FamilySpec::Grid(5, 5));
  EXPECT_EQ(grid.order(), 25u);
  EXPECT_EQ(grid.edge_count(), 40u);
  EXPECT_TRUE(grid.adjacent(0, 5));
  EXPECT_FALSE(grid.adjacent(4, 5));

  EXPECT_EQ(generate(FamilySpec::Complete(6)).edge_count(), 15u);
}

TEST(GenerateTest, BadSpecs) {
  EXPECT_EQ(code_of([] { generate(FamilySpec::Cycle(2)); }), ErrorCode::kBadSpec);
  EXPECT_EQ(code_of([] { generate(FamilySpec::Path(0)); }), ErrorCode::kBadSpec);
  EXPECT_EQ(code_of([] { generate({FamilyKind::kCompleteBipartite, {3}}); }),
            ErrorCode::kBadSpec);
  EXPECT_EQ(code_of([] { gamma_formula({FamilyKind::kGrid, {2, 0}}); }),
            ErrorCode::kBadSpec);
}

TEST(FamilyKindTest, NamesRoundTrip) {
  for (FamilyKind k : {FamilyKind::kPath, FamilyKind::kCycle, FamilyKind::kComplete,
                       FamilyKind::kStar, FamilyKind::kCompleteBipartite,
                       FamilyKind::kGrid})
    EXPECT_EQ(parse_family_kind(to_string(k)), k);
  EXPECT_EQ(parse_family_kind("bipartite"), FamilyKind::kCompleteBipartite);
  EXPECT_FALSE(parse_family_kind("wheel").has_value());
}

TEST(GammaFormulaTest, Examples) {
  EXPECT_EQ(gamma_formula(FamilySpec::Complete(6)), 4);
  EXPECT_EQ(gamma_formula(FamilySpec::Complete(3)), 3);
  EXPECT_EQ(gamma_formula(FamilySpec::Star(4)), 5);
  EXPECT_EQ(gamma_formula(FamilySpec::Path(17)), 14);
  EXPECT_EQ(gamma_formula(FamilySpec::Cycle(4)), 4);
  EXPECT_EQ(gamma_formula(FamilySpec::CompleteBipartite(2, 6)), 4);
  EXPECT_EQ(gamma_formula(FamilySpec::CompleteBipartite(6, 2)), 4);
  EXPECT_FALSE(gamma_formula(FamilySpec::Grid(5, 5)).has_value());
  EXPECT_FALSE(gamma_formula(FamilySpec::CompleteBipartite(6, 6)).has_value());
}

// Formula, branch and bound, path packing and the 3^n oracle agree.
TEST(GammaFormulaTest, AgreesWithSolvers) {
  std::vector<FamilySpec> specs;
  for (std::size_t n = 1; n <= 8; ++n) {
    specs.push_back(FamilySpec::Complete(n));
    specs.push_back(FamilySpec::Star(n));
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    specs.push_back(FamilySpec::Path(n));
    specs.push_back(FamilySpec::Cycle(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) specs.push_back(FamilySpec::CompleteBipartite(2, n));

  for (const FamilySpec& spec : specs) {
    SCOPED_TRACE(std::string(to_string(spec.kind)) + " " + std::to_string(spec.sizes.back()));
    Graph g = generate(spec);
    long formula = *gamma_formula(spec);
    EXPECT_EQ(brute(g).gamma, formula);
    EXPECT_EQ(gamma_via_eccd(g).gamma, formula);
    if (g.order() <= 9) {
      EXPECT_EQ(testing::oracle_solve(g).gamma, formula);
    }
  }
}

TEST(GammaFormulaTest, PathAndCycleOptimalNumber) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(max_eccd(generate(FamilySpec::Path(n))).size(), n / 5);
    EXPECT_EQ(max_eccd(generate(FamilySpec::Cycle(n))).size(), n / 5);
  }
}

TEST(DensityTest, Examples) {
  EXPECT_EQ(density(generate(FamilySpec::Path(5))), Rational(4, 5));
  EXPECT_EQ(density(generate(FamilySpec::Complete(3))), Rational(1));
  EXPECT_EQ(density(generate(FamilySpec::CompleteBipartite(2, 6))), Rational(1, 2));
  EXPECT_EQ(format_rational(Rational(4, 8)), "1/2");
  EXPECT_EQ(format_rational(Rational(3, 3)), "1");
  EXPECT_EQ(code_of([] { density(Graph()); }), ErrorCode::kEmptyGraph);
}

TEST(DensityLowerBoundTest, Values) {
  EXPECT_EQ(density_lower_bound(2), Rational(4, 5));
  EXPECT_EQ(density_lower_bound(3), Rational(2, 3));
  EXPECT_EQ(density_lower_bound(4), Rational(4, 7));
  EXPECT_EQ(density_lower_bound(6), Rational(4, 9));
}

// The bound holds whenever some vertex has a neighbor. Edgeless graphs have
// density 1 < 4/3 and are the known exception.
TEST(DensityLowerBoundTest, HoldsOnCorpus) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : testing::graphs_of_order(n)) {
      Rational d = density(g);
      if (max_degree(g) == 0)
        EXPECT_LT(d, density_lower_bound(0));
      else
        EXPECT_GE(d, density_lower_bound(max_degree(g)));
    }
  }
}

// An optimal graph with a minimum labeling that uses a 1 stays strictly above
// the bound.
TEST(DensityLowerBoundTest, StrictWhenOnesAreUsed) {
  int checked = 0;
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    SolveOptions opts;
    opts.method = Method::kBruteforce;
    opts.enumerate_all = true;
    SolveResult r = solve(g, opts);
    if (r.gamma >= static_cast<long>(g.order())) continue;
    bool uses_one = std::any_of(r.all_minimum->begin(), r.all_minimum->end(),
                                [&](const Labeling& f) { return !partition(g, f).ones.empty(); });
    if (!uses_one) continue;
    ++checked;
    EXPECT_GT(Rational(r.gamma, static_cast<long>(g.order())),
              density_lower_bound(max_degree(g)));
  }
  EXPECT_GT(checked, 100);
}

TEST(SierpinskiTest, Shape) {
  Graph t0 = sierpinski_triangle(0);
  EXPECT_EQ(t0.order(), 3u);
  EXPECT_EQ(t0.edge_count(), 3u);
  Graph t1 = sierpinski_triangle(1);
  EXPECT_EQ(t1.order(), 6u);
  EXPECT_EQ(t1.edge_count(), 9u);
  Graph t3 = sierpinski_triangle(3);
  EXPECT_EQ(t3.order(), 42u);
  EXPECT_EQ(t3.edge_count(), 81u);
  EXPECT_EQ(max_degree(t3), 4u);
  std::size_t corners = 0;
  for (Vertex v = 0; v < t3.order(); ++v) corners += t3.degree(v) == 2;
  EXPECT_EQ(corners, 3u);
}

}  // namespace
}  // namespace rdom
