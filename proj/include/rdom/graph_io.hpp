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

#ifndef RDOM_GRAPH_IO_HPP_
#define RDOM_GRAPH_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/labeling.hpp"
#include "rdom/solver.hpp"

namespace rdom {

// Graph files hold one record per vertex:
//
//   <id>;<label>;<n1,n2,...>
//
// with label in {-1, 0, 1, 2} (-1 = unlabeled) and a possibly empty
// neighbor list. Blank lines and lines starting with '#' are skipped.
// Whitespace around fields is ignored. Internal ids follow record order.
struct ParsedGraph {
  Graph graph;
  // Present only when no record is labeled -1.
  std::optional<Labeling> labeling;
  // One entry per neighbor mention that the other side omits.
  std::vector<std::string> warnings;
};

// Throws ParseError for malformed records, out-of-range labels and
// self-loops; Error{kDuplicateVertex}, Error{kUnknownNeighbor} and
// Error{kMixedLabels} for the corresponding structural problems.
ParsedGraph parse_graph_file(std::string_view text);

// Records in internal id order with neighbors sorted by external id. With
// `sort_ids`, records are ordered by external id instead, which is the
// canonical form. Vertices are written unlabeled (-1) when f is null.
std::string write_graph_text(const Graph& g, const Labeling* f = nullptr,
                             bool sort_ids = false);

// parse_graph_file followed by canonical write_graph_text.
std::string canonicalize_graph_text(std::string_view text);

enum class OutputFormat { kText, kJson, kDot };

// Extra facts a structured report can carry next to the labeling.
struct ReportContext {
  std::optional<long> gamma;
  std::optional<bool> valid;
  std::optional<int> attack_n;
  std::optional<Method> method;
  std::optional<SearchStats> stats;
};

// kText: write_graph_text. kJson: a JSON document with weight, labels,
// partition sizes, epn/public counts and whatever the context supplies.
// kDot: undirected DOT with one fill color per label.
std::string write_labeling(const Graph& g, const Labeling& f, OutputFormat format,
                           const ReportContext& ctx = {});

}  // namespace rdom

#endif  // RDOM_GRAPH_IO_HPP_
