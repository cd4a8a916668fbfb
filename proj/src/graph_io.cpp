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

#include "rdom/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rdom/errors.hpp"

namespace rdom {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::optional<long long> parse_int(std::string_view s) {
  s = trim(s);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

struct Record {
  std::size_t line = 0;
  ExternalId id = 0;
  int label = -1;
  std::vector<ExternalId> neighbors;
};

Record parse_record(std::string_view text, std::size_t line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    fields.push_back(text.substr(start, semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (fields.size() == 2) fields.emplace_back();  // "id;label" with no list
  if (fields.size() != 3)
    throw ParseError(line, "expected '<id>;<label>;<neighbors>'");

  Record r;
  r.line = line;
  auto id = parse_int(fields[0]);
  if (!id || *id < 0) throw ParseError(line, "vertex id must be a non-negative integer");
  r.id = *id;
  auto label = parse_int(fields[1]);
  if (!label) throw ParseError(line, "label must be an integer");
  if (*label < -1 || *label > 2)
    throw ParseError(line, "label " + std::to_string(*label) + " outside -1..2");
  r.label = static_cast<int>(*label);

  std::string_view list = trim(fields[2]);
  if (list.empty()) return r;
  std::set<ExternalId> seen;
  std::size_t pos = 0;
  while (true) {
    auto comma = list.find(',', pos);
    auto n = parse_int(list.substr(pos, comma - pos));
    if (!n || *n < 0)
      throw ParseError(line, "neighbor ids must be non-negative integers");
    if (*n == r.id) throw ParseError(line, "self-loop on vertex " + std::to_string(r.id));
    if (!seen.insert(*n).second)
      throw ParseError(line, "neighbor " + std::to_string(*n) + " listed twice");
    r.neighbors.push_back(*n);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return r;
}

std::vector<Vertex> record_order(const Graph& g, bool sort_ids) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  if (sort_ids) {
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return g.external_id(a) < g.external_id(b);
    });
  }
  return order;
}

const char* fill_color(int label) {
  switch (label) {
    case 0: return "white";
    case 1: return "lightblue";
    default: return "tomato";
  }
}

}  // namespace

ParsedGraph parse_graph_file(std::string_view text) {
  std::vector<Record> records;
  std::map<ExternalId, Vertex> index;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl - start);
    ++line_no;
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      Record r = parse_record(line, line_no);
      if (!index.emplace(r.id, records.size()).second)
        throw Error(ErrorCode::kDuplicateVertex,
                    "vertex " + std::to_string(r.id) + " defined twice (line " +
                        std::to_string(line_no) + ")");
      records.push_back(std::move(r));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  ParsedGraph out;
  std::set<std::pair<ExternalId, ExternalId>> mentions;
  for (const Record& r : records) {
    for (ExternalId n : r.neighbors) {
      if (!index.count(n))
        throw Error(ErrorCode::kUnknownNeighbor,
                    "vertex " + std::to_string(n) + " (line " +
                        std::to_string(r.line) + ") has no record");
      mentions.emplace(r.id, n);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : mentions) {
    if (!mentions.count({v, u})) {
      out.warnings.push_back("vertex " + std::to_string(u) + " lists " +
                             std::to_string(v) + " but not vice versa; edge added");
    }
    edges.emplace_back(index[u], index[v]);
  }

  std::vector<ExternalId> ids;
  ids.reserve(records.size());
  std::size_t unlabeled = 0;
  for (const Record& r : records) {
    ids.push_back(r.id);
    if (r.label == -1) ++unlabeled;
  }
  out.graph = build_graph(records.size(), edges, std::move(ids));

  if (unlabeled != 0 && unlabeled != records.size())
    throw Error(ErrorCode::kMixedLabels,
                std::to_string(unlabeled) + " of " + std::to_string(records.size()) +
                    " vertices are unlabeled");
  if (unlabeled == 0) {
    std::vector<int> labels;
    labels.reserve(records.size());
    for (const Record& r : records) labels.push_back(r.label);
    out.labeling = Labeling(std::move(labels));
  }
  return out;
}

std::string write_graph_text(const Graph& g, const Labeling* f, bool sort_ids) {
  if (f) f->check_fits(g);
  std::ostringstream out;
  for (Vertex v : record_order(g, sort_ids)) {
    std::vector<ExternalId> neighbors;
    for (Vertex u : g.neighbor_list(v)) neighbors.push_back(g.external_id(u));
    std::sort(neighbors.begin(), neighbors.end());
    out << g.external_id(v) << ";" << (f ? (*f)[v] : -1) << ";";
    for (std::size_t i = 0; i < neighbors.size(); ++i)
      out << (i ? "," : "") << neighbors[i];
    out << "\n";
  }
  return out.str();
}

std::string canonicalize_graph_text(std::string_view text) {
  ParsedGraph parsed = parse_graph_file(text);
  return write_graph_text(parsed.graph,
                          parsed.labeling ? &*parsed.labeling : nullptr, true);
}

std::string write_labeling(const Graph& g, const Labeling& f, OutputFormat format,
                           const ReportContext& ctx) {
  f.check_fits(g);
  switch (format) {
    case OutputFormat::kText:
      return write_graph_text(g, &f);
    case OutputFormat::kDot: {
      std::ostringstream out;
      out << "graph G {\n  node [style=filled];\n";
      for (Vertex v = 0; v < g.order(); ++v) {
        out << "  v" << g.external_id(v) << " [label=\"" << g.external_id(v)
            << ":" << f[v] << "\", fillcolor=" << fill_color(f[v]) << "];\n";
      }
      for (auto [u, v] : g.edges())
        out << "  v" << g.external_id(u) << " -- v" << g.external_id(v) << ";\n";
      out << "}\n";
      return out.str();
    }
    case OutputFormat::kJson:
      break;
  }

  Partition parts = partition(g, f);
  nlohmann::ordered_json doc;
  doc["order"] = g.order();
  if (ctx.gamma) doc["gamma"] = *ctx.gamma;
  doc["weight"] = weight(f);
  if (ctx.attack_n) doc["attack"] = *ctx.attack_n;
  if (ctx.valid) doc["valid"] = *ctx.valid;
  if (ctx.method) doc["method"] = std::string(to_string(*ctx.method));
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.order(); ++v)
    labels.push_back({{"id", g.external_id(v)}, {"label", f[v]}});
  doc["labels"] = std::move(labels);
  doc["partition"] = {{"zeros", parts.zeros.size()},
                      {"ones", parts.ones.size()},
                      {"twos", parts.twos.size()}};
  doc["epn_count"] = epn_set(g, f).size();
  doc["public_count"] = public_set(g, f).size();
  if (ctx.stats) {
    doc["stats"] = {
        {"nodes", ctx.stats->nodes},
        {"elapsed_ms",
         std::chrono::duration<double, std::milli>(ctx.stats->elapsed).count()}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace rdom
