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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdom/eccd.hpp"
#include "rdom/errors.hpp"
#include "rdom/families.hpp"
#include "rdom/graph_io.hpp"
#include "rdom/solver.hpp"
#include "rdom/tilings.hpp"

namespace rdom {
namespace {

using Json = nlohmann::ordered_json;

// Bad file names, missing labels and the like: exit status 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

ParsedGraph load_graph(const std::string& path, std::ostream& err) {
  ParsedGraph parsed = parse_graph_file(read_input(path));
  for (const std::string& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed;
}

std::string join_ids(const Graph& g, const std::vector<Vertex>& vs,
                     const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(g.external_id(vs[i]));
  }
  return s;
}

Json ids_json(const Graph& g, const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(g.external_id(v));
  return a;
}

std::string label_string(const Labeling& f) {
  std::string s;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(f[v]);
  }
  return s;
}

Json report_json(const Graph& g, const Labeling& f, const ReportContext& ctx) {
  return Json::parse(write_labeling(g, f, OutputFormat::kJson, ctx));
}

void maybe_dot(const std::string& path, const Graph& g, const Labeling& f) {
  if (!path.empty()) write_output(path, write_labeling(g, f, OutputFormat::kDot));
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  auto x = text.find_first_of("xX");
  std::size_t w = 0;
  std::size_t h = 0;
  try {
    std::size_t used_w = 0;
    std::size_t used_h = 0;
    if (x == std::string::npos) throw std::invalid_argument(text);
    w = std::stoul(text.substr(0, x), &used_w);
    h = std::stoul(text.substr(x + 1), &used_h);
    if (used_w != x || used_h != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw UsageError("--size expects WxH, got '" + text + "'");
  }
  return {w, h};
}

struct Flags {
  std::string file;
  int attack = 2;
  std::optional<std::size_t> max_twos;
  std::string two_mode = "any";
  std::string method = "auto";
  bool all = false;
  bool json = false;
  std::string dot;
  std::size_t threads = 1;
  std::string output;
  std::string family;
  std::vector<std::size_t> params;
  std::string size = "";
  // Empty means torus with --verify-pattern and open otherwise.
  std::string wrap;
  bool verify = false;
  std::string pattern_in;
  std::string pattern_out;
  std::vector<std::size_t> radii;
};

SolveOptions solve_options(const Flags& flags) {
  SolveOptions opts;
  opts.attack_n = flags.attack;
  opts.max_twos = flags.max_twos;
  opts.two_mode = flags.two_mode == "min"   ? TwoMode::kMinimizeTwos
                  : flags.two_mode == "max" ? TwoMode::kMaximizeTwos
                                            : TwoMode::kAny;
  opts.method = flags.method == "bruteforce" ? Method::kBruteforce
                : flags.method == "eccd"     ? Method::kEccd
                                             : Method::kAuto;
  opts.enumerate_all = flags.all;
  opts.threads = std::max<std::size_t>(1, flags.threads);
  opts.limits = limits_from_environment();
  return opts;
}

int cmd_validate(const Flags& flags, std::ostream& out, std::ostream& err) {
  ParsedGraph parsed = load_graph(flags.file, err);
  if (!parsed.labeling) throw UsageError("'" + flags.file + "' has no labeling");
  const Graph& g = parsed.graph;
  const Labeling& f = *parsed.labeling;
  ValidationReport report = validate(g, f, flags.attack);
  maybe_dot(flags.dot, g, f);
  if (flags.json) {
    ReportContext ctx;
    ctx.valid = report.valid;
    ctx.attack_n = flags.attack;
    Json doc = report_json(g, f, ctx);
    if (!report.valid) doc["witness"] = ids_json(g, report.witness);
    out << doc.dump(2) << "\n";
  } else if (report.valid) {
    out << "valid (attack " << flags.attack << ", weight " << weight(f) << ")\n";
  } else {
    out << "invalid (attack " << flags.attack << ")\n";
    out << "witness " << join_ids(g, report.witness) << "\n";
  }
  return report.valid ? kExitOk : kExitInvalid;
}

int cmd_solve(const Flags& flags, std::ostream& out, std::ostream& err) {
  ParsedGraph parsed = load_graph(flags.file, err);
  const Graph& g = parsed.graph;
  SolveResult r = solve(g, solve_options(flags));
  maybe_dot(flags.dot, g, r.labeling);
  if (flags.json) {
    Json doc = report_json(g, r.labeling,
                           {.gamma = r.gamma,
                            .valid = true,
                            .attack_n = flags.attack,
                            .method = r.method_used,
                            .stats = r.stats});
    doc["optimal_number"] = r.optimal_number;
    if (r.all_minimum) {
      Json all = Json::array();
      for (const Labeling& f : *r.all_minimum) {
        Json labels = Json::array();
        for (std::size_t v = 0; v < f.size(); ++v) labels.push_back(f[v]);
        all.push_back(std::move(labels));
      }
      doc["all_minimum"] = std::move(all);
    }
    if (r.feasible_two_counts) doc["feasible_twos"] = *r.feasible_two_counts;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "gamma " << r.gamma << "\n";
  out << "optimal_number " << r.optimal_number << "\n";
  out << "method " << to_string(r.method_used) << "\n";
  out << "twos " << count_twos(r.labeling) << "\n";
  out << "nodes " << r.stats.nodes << "\n";
  if (r.all_minimum) {
    out << "minimum_labelings " << r.all_minimum->size() << "\n";
    for (const Labeling& f : *r.all_minimum) out << "labeling " << label_string(f) << "\n";
  }
  if (r.feasible_two_counts) {
    out << "feasible_twos";
    for (std::size_t c : *r.feasible_two_counts) out << " " << c;
    out << "\n";
  }
  out << write_graph_text(g, &r.labeling);
  return kExitOk;
}

int cmd_optimal(const Flags& flags, std::ostream& out, std::ostream& err) {
  ParsedGraph parsed = load_graph(flags.file, err);
  const Graph& g = parsed.graph;
  OptimalityVerdict verdict = is_optimal(g);
  maybe_dot(flags.dot, g, verdict.witness);
  std::vector<Vertex> cert;
  if (verdict.certificate)
    cert.assign(verdict.certificate->begin(), verdict.certificate->end());
  if (flags.json) {
    Json doc;
    doc["optimal"] = verdict.optimal;
    doc["optimal_number"] = verdict.optimal_number;
    doc["gamma"] = static_cast<long>(g.order()) - verdict.optimal_number;
    doc["certificate"] = verdict.certificate ? ids_json(g, cert) : Json();
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << (verdict.optimal ? "optimal" : "sub-optimal") << "\n";
  out << "optimal_number " << verdict.optimal_number << "\n";
  if (verdict.certificate) out << "certificate " << join_ids(g, cert, "-") << "\n";
  return kExitOk;
}

int cmd_density(const Flags& flags, std::ostream& out, std::ostream& err) {
  ParsedGraph parsed = load_graph(flags.file, err);
  const Graph& g = parsed.graph;
  Rational d = density(g, solve_options(flags));
  Rational bound = density_lower_bound(max_degree(g));
  if (flags.json) {
    Json doc;
    doc["order"] = g.order();
    doc["density"] = format_rational(d);
    doc["lower_bound"] = format_rational(bound);
    doc["max_degree"] = max_degree(g);
    out << doc.dump(2) << "\n";
  } else {
    out << "density " << format_rational(d) << "\n";
    out << "lower_bound " << format_rational(bound) << " (max degree "
        << max_degree(g) << ")\n";
  }
  return kExitOk;
}

int cmd_gen(const Flags& flags, std::ostream& out) {
  Graph g;
  if (flags.family == "sierpinski") {
    if (flags.params.size() != 1) throw UsageError("sierpinski takes one iteration count");
    g = sierpinski_triangle(flags.params[0]);
  } else {
    auto kind = parse_family_kind(flags.family);
    if (!kind) throw UsageError("unknown family '" + flags.family + "'");
    g = generate(FamilySpec{*kind, flags.params});
  }
  std::string text = write_graph_text(g);
  if (flags.output.empty()) {
    out << text;
  } else {
    write_output(flags.output, text);
  }
  return kExitOk;
}

int cmd_tiling(const Flags& flags, std::ostream& out) {
  auto kind = parse_tiling_kind(flags.family);
  if (!kind) throw UsageError("unknown tiling '" + flags.family + "'");
  auto wrap = flags.wrap.empty() ? (flags.verify ? Wrap::kTorus : Wrap::kOpen)
                                 : parse_wrap(flags.wrap);
  if (!wrap) throw UsageError("--wrap expects torus or open");

  TilingPattern pattern = flags.pattern_in.empty()
                              ? (flags.verify || !flags.pattern_out.empty()
                                     ? standard_pattern(*kind)
                                     : uniform_pattern(*kind, 1))
                              : read_pattern_table(read_input(flags.pattern_in));
  if (pattern.kind != *kind) throw UsageError("pattern file is for another tiling");
  if (!flags.pattern_out.empty()) write_output(flags.pattern_out, write_pattern_table(pattern));

  PatchSpec spec{*kind, 0, 0, *wrap};
  if (flags.size.empty()) {
    if (!flags.verify && !flags.pattern_out.empty()) return kExitOk;
    if (!flags.verify) throw UsageError("--size is required");
    spec = minimal_torus(pattern);
  } else {
    std::tie(spec.width, spec.height) = parse_size(flags.size);
  }

  if (!flags.verify) {
    // A patch is labeled only when a pattern file is given.
    Graph g = generate_patch(spec);
    std::optional<Labeling> f;
    if (!flags.pattern_in.empty()) f = pattern_labeling(pattern, spec);
    maybe_dot(flags.dot, g, f ? *f : Labeling::Uniform(g.order(), 1));
    std::string text = write_graph_text(g, f ? &*f : nullptr);
    if (flags.output.empty()) {
      out << text;
    } else {
      write_output(flags.output, text);
    }
    return kExitOk;
  }

  if (spec.wrap != Wrap::kTorus) throw UsageError("--verify-pattern needs --wrap torus");
  PatternCheck check = verify_pattern(pattern, {{spec.width, spec.height}}).front();
  Rational bound = density_lower_bound(tiling_degree(*kind));
  if (!flags.dot.empty()) {
    Graph g = generate_patch(spec);
    maybe_dot(flags.dot, g, pattern_labeling(pattern, spec));
  }
  if (flags.json) {
    Json doc;
    doc["kind"] = std::string(to_string(*kind));
    doc["width"] = spec.width;
    doc["height"] = spec.height;
    doc["period"] = {pattern.period_x, pattern.period_y};
    doc["valid"] = check.valid;
    doc["density"] = format_rational(check.density);
    doc["lower_bound"] = format_rational(bound);
    doc["witness"] = check.witness;
    out << doc.dump(2) << "\n";
  } else {
    out << (check.valid ? "valid" : "invalid") << ", density "
        << format_rational(check.density) << "\n";
    out << "lower_bound " << format_rational(bound)
        << (check.density == bound ? " (attained)" : "") << "\n";
    if (!check.valid) {
      out << "witness";
      for (Vertex v : check.witness) out << " (" << v % spec.width << "," << v / spec.width << ")";
      out << "\n";
    }
  }
  return check.valid ? kExitOk : kExitInvalid;
}

int cmd_balls(const Flags& flags, std::ostream& out) {
  auto kind = parse_ball_kind(flags.family);
  if (!kind) throw UsageError("unknown ball kind '" + flags.family + "'");
  auto seq = ball_density_sequence(*kind, flags.radii, solve_options(flags));
  if (flags.json) {
    Json rows = Json::array();
    for (const BallDensity& b : seq)
      rows.push_back({{"radius", b.radius}, {"order", b.order},
                      {"density", format_rational(b.density)}});
    out << rows.dump(2) << "\n";
  } else {
    for (const BallDensity& b : seq)
      out << "radius " << b.radius << " order " << b.order << " density "
          << format_rational(b.density) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact n-attack Roman domination toolkit", "rdom"};
  app.require_subcommand(1);
  Flags flags;

  auto add_output = [&](CLI::App* cmd, bool dot) {
    cmd->add_flag("--json", flags.json, "Structured output");
    if (dot) cmd->add_option("--dot", flags.dot, "Write a DOT rendering to FILE");
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--attack", flags.attack, "Attack size n")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a labeled graph file");
  validate_cmd->add_option("file", flags.file, "Graph file ('-' for stdin)")->required();
  validate_cmd->add_option("--attack", flags.attack, "Attack size n")->check(CLI::PositiveNumber);
  add_output(validate_cmd, true);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Minimum-weight labeling");
  solve_cmd->add_option("file", flags.file, "Graph file ('-' for stdin)")->required();
  add_solver(solve_cmd);
  solve_cmd->add_option("--max-twos", flags.max_twos, "Cap on vertices labeled 2");
  solve_cmd->add_option("--two-mode", flags.two_mode, "Tie-break on the number of 2s")
      ->check(CLI::IsMember({"min", "max", "any"}));
  solve_cmd->add_option("--method", flags.method, "Solver route")
      ->check(CLI::IsMember({"bruteforce", "eccd", "auto"}));
  solve_cmd->add_flag("--all", flags.all, "Enumerate every minimum labeling");
  add_output(solve_cmd, true);

  CLI::App* optimal_cmd = app.add_subcommand("optimal", "Optimality verdict and certificate");
  optimal_cmd->add_option("file", flags.file, "Graph file ('-' for stdin)")->required();
  add_output(optimal_cmd, true);

  CLI::App* density_cmd = app.add_subcommand("density", "Exact density and its degree bound");
  density_cmd->add_option("file", flags.file, "Graph file ('-' for stdin)")->required();
  add_solver(density_cmd);
  add_output(density_cmd, false);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a family graph");
  gen_cmd->add_option("family", flags.family,
                      "path|cycle|complete|star|complete_bipartite|grid|sierpinski")
      ->required();
  gen_cmd->add_option("params", flags.params, "Size parameters")->required();
  gen_cmd->add_option("-o,--output", flags.output, "Write to FILE instead of stdout");

  CLI::App* tiling_cmd = app.add_subcommand("tiling", "Lattice patches and periodic patterns");
  tiling_cmd->add_option("kind", flags.family, "square|hexagonal|triangular")->required();
  tiling_cmd->add_option("--size", flags.size, "Patch size WxH");
  tiling_cmd->add_option("--wrap", flags.wrap, "torus|open (default: torus when verifying)");
  tiling_cmd->add_flag("--verify-pattern", flags.verify, "Validate the periodic pattern");
  tiling_cmd->add_option("--pattern", flags.pattern_in, "Read a pattern table from FILE");
  tiling_cmd->add_option("--pattern-out", flags.pattern_out, "Dump the pattern table to FILE");
  tiling_cmd->add_option("-o,--output", flags.output, "Write the patch to FILE");
  add_output(tiling_cmd, true);

  CLI::App* balls_cmd = app.add_subcommand("balls", "Densities of balls in infinite graphs");
  balls_cmd->add_option("kind", flags.family, "path|square|hexagonal|triangular")->required();
  balls_cmd->add_option("--radii", flags.radii, "Comma-separated radii")
      ->delimiter(',')
      ->required();
  add_solver(balls_cmd);
  add_output(balls_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(flags, out, err);
    if (solve_cmd->parsed()) return cmd_solve(flags, out, err);
    if (optimal_cmd->parsed()) return cmd_optimal(flags, out, err);
    if (density_cmd->parsed()) return cmd_density(flags, out, err);
    if (gen_cmd->parsed()) return cmd_gen(flags, out);
    if (tiling_cmd->parsed()) return cmd_tiling(flags, out);
    if (balls_cmd->parsed()) return cmd_balls(flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace rdom
