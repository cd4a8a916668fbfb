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

#include "support/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace rdom::testing {

std::string fixture_path(std::string_view name) {
  return (std::filesystem::path(RDOM_FIXTURE_DIR) / name).string();
}

std::string read_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ParsedGraph load_fixture(std::string_view name) {
  return parse_graph_file(read_fixture(name));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(RDOM_FIXTURE_DIR))
    if (entry.path().extension() == ".txt") names.push_back(entry.path().filename());
  std::sort(names.begin(), names.end());
  return names;
}

Vertex ext(const Graph& g, ExternalId id) {
  auto v = g.internal_id(id);
  if (!v) throw std::out_of_range("no vertex " + std::to_string(id));
  return *v;
}

std::vector<Vertex> ext(const Graph& g, std::initializer_list<ExternalId> ids) {
  std::vector<Vertex> out;
  for (ExternalId id : ids) out.push_back(ext(g, id));
  return out;
}

}  // namespace rdom::testing
