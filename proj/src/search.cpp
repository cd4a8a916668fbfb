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

#include "search.hpp"

#include <algorithm>
#include <numeric>

namespace rdom::internal {

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

std::vector<Vertex> identity_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

LabelState::LabelState(const Graph& g, int attack_n, std::vector<Vertex> order,
                       bool degree_bound)
    : graph_(g),
      attack_n_(attack_n),
      degree_bound_(degree_bound),
      order_(std::move(order)),
      labels_(g.order(), -1),
      open_count_(g.order()),
      two_count_(g.order(), 0),
      sole_count_(g.order(), 0) {
  for (Vertex v = 0; v < g.order(); ++v)
    open_count_[v] = static_cast<std::uint32_t>(g.degree(v));
  frames_.reserve(order_.size());
  if (!degree_bound_) return;
  capacity_prefix_.resize(order_.size() + 1);
  for (std::size_t d = 0; d <= order_.size(); ++d) {
    std::vector<long> caps;
    caps.reserve(order_.size() - d);
    for (std::size_t i = d; i < order_.size(); ++i)
      caps.push_back(static_cast<long>(g.degree(order_[i])) +
                     (attack_n_ >= 2 ? 1 : 0));
    std::sort(caps.begin(), caps.end(), std::greater<>());
    auto& prefix = capacity_prefix_[d];
    prefix.assign(caps.size() + 1, 0);
    std::partial_sum(caps.begin(), caps.end(), prefix.begin() + 1);
  }
}

void LabelState::Close(Vertex x, bool& ok) {
  if (labels_[x] != 0) return;
  if (two_count_[x] == 0) {
    ok = false;
    return;
  }
  if (attack_n_ < 2 || two_count_[x] != 1) return;
  for (Vertex u : graph_.neighbor_list(x)) {
    if (labels_[u] != 2) continue;
    sole_log_.push_back(u);
    if (++sole_count_[u] > 1) ok = false;
    return;
  }
}

bool LabelState::push(int label) {
  Vertex v = order_[depth_];
  frames_.push_back({v, sole_log_.size()});
  labels_[v] = static_cast<std::int8_t>(label);
  ++depth_;
  weight_ += label;
  if (label == 0) ++zeros_;
  if (label == 2) {
    ++twos_;
    two_capacity_ += static_cast<long>(graph_.degree(v)) +
                     (attack_n_ >= 2 ? 1 : 0);
  }
  for (Vertex w : graph_.neighbor_list(v)) {
    --open_count_[w];
    if (label == 2) ++two_count_[w];
  }
  bool ok = true;
  if (open_count_[v] == 0) Close(v, ok);
  for (Vertex w : graph_.neighbor_list(v))
    if (open_count_[w] == 0 && labels_[w] >= 0) Close(w, ok);
  return ok;
}

void LabelState::pop() {
  Frame frame = frames_.back();
  frames_.pop_back();
  while (sole_log_.size() > frame.sole_begin) {
    --sole_count_[sole_log_.back()];
    sole_log_.pop_back();
  }
  Vertex v = frame.vertex;
  int label = labels_[v];
  for (Vertex w : graph_.neighbor_list(v)) {
    ++open_count_[w];
    if (label == 2) --two_count_[w];
  }
  if (label == 0) --zeros_;
  if (label == 2) {
    --twos_;
    two_capacity_ -= static_cast<long>(graph_.degree(v)) +
                     (attack_n_ >= 2 ? 1 : 0);
  }
  weight_ -= label;
  labels_[v] = -1;
  --depth_;
}

long LabelState::lower_bound(std::size_t max_twos) const {
  const long open = static_cast<long>(undecided());
  if (twos_ > max_twos) return kInfinity;
  if (!degree_bound_) return weight_;
  // With c more 2-labels the zeros are capped by half (n >= 2) or all (n = 1)
  // of the summed capacities; the rest of the undecided vertices cost >= 1.
  const auto& prefix = capacity_prefix_[depth_];
  const long max_extra =
      std::min<long>(open, static_cast<long>(std::min<std::size_t>(
                               max_twos - twos_, order_.size())));
  const long zeros = static_cast<long>(zeros_);
  long best = kInfinity;
  for (long c = 0; c <= max_extra; ++c) {
    long cap = two_capacity_ + prefix[static_cast<std::size_t>(c)];
    if (attack_n_ >= 2) cap /= 2;
    long room = cap - zeros;
    if (room < 0) continue;
    long extra_zeros = std::min(open - c, room);
    best = std::min(best, weight_ + (open - c - extra_zeros) + 2 * c);
  }
  return best;
}

bool LabelState::leaf_valid() const {
  if (attack_n_ <= 2) return true;
  return validate(graph_, labeling(), attack_n_).valid;
}

Labeling LabelState::labeling() const {
  std::vector<int> values(labels_.begin(), labels_.end());
  for (auto& v : values)
    if (v < 0) v = 1;
  return Labeling(std::move(values));
}

}  // namespace rdom::internal
