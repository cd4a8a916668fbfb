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

#include "rdom/tilings.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rdom/errors.hpp"

namespace rdom {

const std::vector<int> kHexagonalRow = {0, 0, 0, 2, 2, 0};
const std::vector<int> kTriangularRow = {0, 0, 0, 0, 2, 0, 0, 0, 2};

namespace {

constexpr std::size_t kSquareBlock = 7;
constexpr long kSquareBlockWeight = 4;

bool is_hex(TilingKind kind) { return kind == TilingKind::kHexagonal; }

std::size_t min_width(TilingKind kind) { return is_hex(kind) ? 4 : 3; }
std::size_t min_height(TilingKind kind) { return is_hex(kind) ? 2 : 3; }

// Smallest multiple of `period` that is at least `floor` and, for the
// honeycomb, even.
std::size_t fit_period(std::size_t period, std::size_t floor, bool even) {
  std::size_t size = period;
  while (size < floor || (even && size % 2 != 0)) size += period;
  return size;
}

}  // namespace

std::string_view to_string(TilingKind kind) {
  switch (kind) {
    case TilingKind::kSquare: return "square";
    case TilingKind::kHexagonal: return "hexagonal";
    case TilingKind::kTriangular: return "triangular";
  }
  return "square";
}

std::string_view to_string(Wrap wrap) {
  return wrap == Wrap::kTorus ? "torus" : "open";
}

std::optional<TilingKind> parse_tiling_kind(std::string_view name) {
  if (name == "square") return TilingKind::kSquare;
  if (name == "hexagonal" || name == "hex") return TilingKind::kHexagonal;
  if (name == "triangular" || name == "tri") return TilingKind::kTriangular;
  return std::nullopt;
}

std::optional<Wrap> parse_wrap(std::string_view name) {
  if (name == "open") return Wrap::kOpen;
  if (name == "torus") return Wrap::kTorus;
  return std::nullopt;
}

std::size_t tiling_degree(TilingKind kind) {
  switch (kind) {
    case TilingKind::kSquare: return 4;
    case TilingKind::kHexagonal: return 3;
    case TilingKind::kTriangular: return 6;
  }
  return 4;
}

void check_patch(const PatchSpec& spec) {
  if (spec.width == 0 || spec.height == 0)
    throw Error(ErrorCode::kBadSpec, "patch dimensions must be positive");
  if (spec.wrap != Wrap::kTorus) return;
  bool hex = is_hex(spec.kind);
  if (spec.width < min_width(spec.kind) || spec.height < min_height(spec.kind) ||
      (hex && (spec.width % 2 != 0 || spec.height % 2 != 0))) {
    throw Error(ErrorCode::kIncompatibleTorus,
                std::string(to_string(spec.kind)) + " torus " +
                    std::to_string(spec.width) + "x" +
                    std::to_string(spec.height) +
                    (hex ? " needs an even width >= 4 and an even height"
                         : " needs both sides >= 3"));
  }
}

Graph generate_patch(const PatchSpec& spec) {
  check_patch(spec);
  const std::size_t w = spec.width;
  const std::size_t h = spec.height;
  const bool torus = spec.wrap == Wrap::kTorus;
  std::vector<Edge> edges;
  auto link = [&](std::size_t x, std::size_t y, std::size_t dx, std::size_t dy) {
    std::size_t nx = x + dx;
    std::size_t ny = y + dy;
    if (!torus && (nx >= w || ny >= h)) return;
    edges.emplace_back(y * w + x, (ny % h) * w + nx % w);
  };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      link(x, y, 1, 0);
      switch (spec.kind) {
        case TilingKind::kSquare:
          link(x, y, 0, 1);
          break;
        case TilingKind::kTriangular:
          link(x, y, 0, 1);
          link(x, y, 1, 1);
          break;
        case TilingKind::kHexagonal:
          if ((x + y) % 2 == 0) link(x, y, 0, 1);
          break;
      }
    }
  }
  return build_graph(w * h, edges);
}

Rational TilingPattern::density() const {
  long sum = std::accumulate(labels.begin(), labels.end(), 0L);
  return Rational(sum, static_cast<std::int64_t>(labels.size()));
}

void check_pattern(const TilingPattern& p) {
  if (p.period_x == 0 || p.period_y == 0)
    throw Error(ErrorCode::kBadSpec, "pattern period must be positive");
  if (p.labels.size() != p.period_x * p.period_y)
    throw Error(ErrorCode::kBadSpec, "pattern table does not cover one period");
  for (int label : p.labels)
    if (label < 0 || label > 2)
      throw Error(ErrorCode::kBadSpec, "pattern label outside 0..2");
}

TilingPattern linear_pattern(TilingKind kind, const std::vector<int>& row,
                             std::size_t a, std::size_t b) {
  if (row.empty()) throw Error(ErrorCode::kBadSpec, "empty pattern row");
  const std::size_t len = row.size();
  auto period = [len](std::size_t step) {
    return len / std::gcd(step % len, len);  // gcd(0, len) == len
  };
  TilingPattern p{kind, period(a), period(b), {}};
  p.labels.resize(p.period_x * p.period_y);
  for (std::size_t y = 0; y < p.period_y; ++y)
    for (std::size_t x = 0; x < p.period_x; ++x)
      p.labels[y * p.period_x + x] = row[(a * x + b * y) % len];
  check_pattern(p);
  return p;
}

TilingPattern uniform_pattern(TilingKind kind, int label) {
  TilingPattern p{kind, 1, 1, {label}};
  check_pattern(p);
  return p;
}

PatchSpec minimal_torus(const TilingPattern& p) {
  check_pattern(p);
  bool hex = is_hex(p.kind);
  return PatchSpec{p.kind, fit_period(p.period_x, min_width(p.kind), hex),
                   fit_period(p.period_y, min_height(p.kind), hex), Wrap::kTorus};
}

Labeling pattern_labeling(const TilingPattern& pattern, const PatchSpec& patch) {
  check_pattern(pattern);
  check_patch(patch);
  if (pattern.kind != patch.kind)
    throw Error(ErrorCode::kBadSpec, "pattern is for a " +
                                         std::string(to_string(pattern.kind)) +
                                         " tiling, patch is " +
                                         std::string(to_string(patch.kind)));
  if (patch.wrap != Wrap::kTorus || patch.width % pattern.period_x != 0 ||
      patch.height % pattern.period_y != 0) {
    throw Error(ErrorCode::kIncompatibleTorus,
                "pattern with period " + std::to_string(pattern.period_x) + "x" +
                    std::to_string(pattern.period_y) +
                    " needs a torus of whole periods");
  }
  std::vector<int> labels(patch.width * patch.height);
  for (std::size_t y = 0; y < patch.height; ++y)
    for (std::size_t x = 0; x < patch.width; ++x)
      labels[y * patch.width + x] = pattern.at(x, y);
  return Labeling(std::move(labels));
}

std::vector<PatternCheck> verify_pattern(
    const TilingPattern& pattern,
    const std::vector<std::pair<std::size_t, std::size_t>>& sizes) {
  std::vector<PatternCheck> out;
  for (auto [w, h] : sizes) {
    PatchSpec spec{pattern.kind, w, h, Wrap::kTorus};
    Labeling f = pattern_labeling(pattern, spec);
    Graph g = generate_patch(spec);
    ValidationReport report = validate(g, f, 2);
    out.push_back(PatternCheck{w, h, report.valid,
                               Rational(weight(f), static_cast<std::int64_t>(g.order())),
                               std::move(report.witness)});
  }
  return out;
}

namespace {

bool validates_on_two_sizes(const TilingPattern& p) {
  PatchSpec one = minimal_torus(p);
  auto checks =
      verify_pattern(p, {{one.width, one.height}, {2 * one.width, 2 * one.height}});
  return std::all_of(checks.begin(), checks.end(),
                     [](const PatternCheck& c) { return c.valid; });
}

std::optional<TilingPattern> search_square() {
  std::size_t combos = 1;
  for (std::size_t i = 0; i < kSquareBlock; ++i) combos *= 3;
  for (std::size_t a = 0; a < kSquareBlock; ++a) {
    for (std::size_t code = 0; code < combos; ++code) {
      // Most significant base-3 digit first gives lexicographic order.
      std::vector<int> row(kSquareBlock);
      std::size_t rest = code;
      for (std::size_t i = kSquareBlock; i-- > 0;) {
        row[i] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      if (std::accumulate(row.begin(), row.end(), 0L) != kSquareBlockWeight)
        continue;
      TilingPattern p = linear_pattern(TilingKind::kSquare, row, 1, a);
      if (validates_on_two_sizes(p)) return p;
    }
  }
  return std::nullopt;
}

std::optional<TilingPattern> search_row(TilingKind kind,
                                        const std::vector<int>& row) {
  for (bool along_columns : {false, true}) {
    for (std::size_t s = 0; s < row.size(); ++s) {
      TilingPattern p = along_columns ? linear_pattern(kind, row, s, 1)
                                      : linear_pattern(kind, row, 1, s);
      if (validates_on_two_sizes(p)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TilingPattern> search_pattern(TilingKind kind) {
  switch (kind) {
    case TilingKind::kSquare: return search_square();
    case TilingKind::kHexagonal: return search_row(kind, kHexagonalRow);
    case TilingKind::kTriangular: return search_row(kind, kTriangularRow);
  }
  return std::nullopt;
}

const TilingPattern& standard_pattern(TilingKind kind) {
  static std::mutex mu;
  static std::map<TilingKind, TilingPattern> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  std::optional<TilingPattern> found = search_pattern(kind);
  if (!found)
    throw Error(ErrorCode::kBadSpec, "no " + std::string(to_string(kind)) +
                                         " pattern validates");
  return cache.emplace(kind, std::move(*found)).first->second;
}

std::string write_pattern_table(const TilingPattern& p) {
  check_pattern(p);
  std::ostringstream out;
  out << "# kind " << to_string(p.kind) << "\n";
  out << "# period " << p.period_x << " " << p.period_y << "\n";
  for (std::size_t dy = 0; dy < p.period_y; ++dy)
    for (std::size_t dx = 0; dx < p.period_x; ++dx)
      out << dx << " " << dy << " " << p.at(dx, dy) << "\n";
  return out.str();
}

TilingPattern read_pattern_table(std::string_view text) {
  std::optional<TilingKind> kind;
  std::optional<std::pair<std::size_t, std::size_t>> period;
  std::map<std::pair<std::size_t, std::size_t>, int> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == '#') {
      std::string key = first.size() > 1 ? first.substr(1) : "";
      if (key.empty()) fields >> key;
      if (key == "kind") {
        std::string name;
        fields >> name;
        kind = parse_tiling_kind(name);
        if (!kind) throw ParseError(line_no, "unknown tiling kind '" + name + "'");
      } else if (key == "period") {
        std::size_t px = 0;
        std::size_t py = 0;
        if (!(fields >> px >> py) || px == 0 || py == 0)
          throw ParseError(line_no, "period needs two positive integers");
        period = {px, py};
      }
      continue;
    }
    long dx = 0;
    long dy = 0;
    long label = 0;
    std::istringstream record(line);
    std::string extra;
    if (!(record >> dx >> dy >> label) || (record >> extra))
      throw ParseError(line_no, "expected 'dx dy label'");
    if (dx < 0 || dy < 0) throw ParseError(line_no, "negative residue");
    if (label < 0 || label > 2) throw ParseError(line_no, "label outside 0..2");
    auto key = std::pair{static_cast<std::size_t>(dx), static_cast<std::size_t>(dy)};
    if (!cells.emplace(key, static_cast<int>(label)).second)
      throw Error(ErrorCode::kBadSpec, "residue (" + std::to_string(dx) + ", " +
                                           std::to_string(dy) + ") repeated");
  }
  if (!kind) throw ParseError(line_no, "missing '# kind' header");
  if (cells.empty()) throw Error(ErrorCode::kBadSpec, "empty pattern table");
  if (!period) {
    std::size_t px = 0;
    std::size_t py = 0;
    for (const auto& [key, label] : cells) {
      px = std::max(px, key.first + 1);
      py = std::max(py, key.second + 1);
    }
    period = {px, py};
  }
  TilingPattern p{*kind, period->first, period->second, {}};
  p.labels.assign(p.period_x * p.period_y, -1);
  for (const auto& [key, label] : cells) {
    if (key.first >= p.period_x || key.second >= p.period_y)
      throw Error(ErrorCode::kBadSpec, "residue outside the declared period");
    p.labels[key.second * p.period_x + key.first] = label;
  }
  if (std::find(p.labels.begin(), p.labels.end(), -1) != p.labels.end())
    throw Error(ErrorCode::kBadSpec, "pattern table misses a residue class");
  return p;
}

std::optional<BallKind> parse_ball_kind(std::string_view name) {
  if (name == "path") return BallKind::kPath;
  if (auto kind = parse_tiling_kind(name)) {
    switch (*kind) {
      case TilingKind::kSquare: return BallKind::kSquare;
      case TilingKind::kHexagonal: return BallKind::kHexagonal;
      case TilingKind::kTriangular: return BallKind::kTriangular;
    }
  }
  return std::nullopt;
}

Graph lattice_ball(TilingKind kind, std::size_t radius) {
  // The honeycomb reaches up to 2r columns sideways within distance r.
  std::size_t w = is_hex(kind) ? 4 * radius + 3 : 2 * radius + 1;
  std::size_t h = is_hex(kind) ? 2 * radius + 3 : 2 * radius + 1;
  std::size_t cx = is_hex(kind) ? 2 * radius + 1 : radius;
  std::size_t cy = is_hex(kind) ? radius + 1 : radius;
  Graph patch = generate_patch(PatchSpec{kind, w, h, Wrap::kOpen});
  return ball(patch, cy * w + cx, radius);
}

std::vector<BallDensity> ball_density_sequence(BallKind kind,
                                               const std::vector<std::size_t>& radii,
                                               const SolveOptions& opts) {
  std::vector<BallDensity> out;
  for (std::size_t r : radii) {
    if (kind == BallKind::kPath) {
      auto order = static_cast<std::int64_t>(2 * r + 1);
      out.push_back({r, 2 * r + 1, Rational(order - order / 5, order)});
      continue;
    }
    TilingKind tiling = kind == BallKind::kSquare      ? TilingKind::kSquare
                        : kind == BallKind::kHexagonal ? TilingKind::kHexagonal
                                                       : TilingKind::kTriangular;
    Graph g = lattice_ball(tiling, r);
    if (g.order() > opts.limits.max_order)
      throw Error(ErrorCode::kTooLarge,
                  "ball of radius " + std::to_string(r) + " has " +
                      std::to_string(g.order()) + " vertices");
    out.push_back({r, g.order(), density(g, opts)});
  }
  return out;
}

}  // namespace rdom
