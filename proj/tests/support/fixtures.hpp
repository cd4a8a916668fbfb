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

#ifndef RDOM_TESTS_SUPPORT_FIXTURES_HPP_
#define RDOM_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph_io.hpp"

namespace rdom::testing {

std::string fixture_path(std::string_view name);
std::string read_fixture(std::string_view name);
ParsedGraph load_fixture(std::string_view name);

// File names of every shipped fixture, sorted.
std::vector<std::string> fixture_names();

// Internal id of the vertex with the given external id.
Vertex ext(const Graph& g, ExternalId id);
std::vector<Vertex> ext(const Graph& g, std::initializer_list<ExternalId> ids);

}  // namespace rdom::testing

#endif  // RDOM_TESTS_SUPPORT_FIXTURES_HPP_
