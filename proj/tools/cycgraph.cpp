#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cycgraph/group_spec.hpp"
#include "cycgraph/render.hpp"
#include "cycgraph/theorems.hpp"

using namespace cycgraph;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kSkipOnly = 3;

struct Options {
  std::uint64_t order_cap = GroupLimits{}.order_cap;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::uint64_t node_budget = SolverLimits{}.node_budget;
  std::size_t iso_size_cap = SolverLimits{}.iso_size_cap;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  SuiteBounds bounds;
  std::size_t trials = SuiteConfig{}.iso_trials;
  std::vector<std::string> ids;
  std::string spec;

  SuiteConfig suite() const {
    SuiteConfig c;
    c.group_limits.order_cap = order_cap;
    c.vertex_cap = vertex_cap;
    c.solver.node_budget = node_budget;
    c.solver.iso_size_cap = iso_size_cap;
    c.seed = seed;
    c.iso_trials = trials;
    return c;
  }
};

void add_caps(CLI::App* cmd, Options& o) {
  cmd->add_option("--order-cap", o.order_cap, "largest group order accepted")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--vertex-cap", o.vertex_cap, "largest vertex count built")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-budget", o.node_budget, "search nodes per solver call")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--iso-size-cap", o.iso_size_cap, "largest graph for isomorphism tests")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

// Single writer: everything is rendered to a string first.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!(f << text)) throw GroupError(GroupErrorKind::io_error, "cannot write " + o.out);
}

int cmd_analyze(const Options& o) {
  auto config = o.suite();
  auto spec = GroupSpec::parse(o.spec);
  auto group = realize(spec, config.group_limits);
  auto g = build(group, config.vertex_cap);
  auto report = analyze(g.graph, config.solver);
  std::ostringstream s;
  if (parse_report_format(o.format) == ReportFormat::json) {
    ordered_json j{{"group", spec.to_string()},
                   {"order", group.order()},
                   {"report", report_json(report)},
                   {"vertices", vertices_json(g)}};
    s << j.dump(2) << '\n';
  } else {
    write_report_text(s, spec.to_string(), g, report);
  }
  emit(o, s.str());
  return kPass;
}

int cmd_export(const Options& o) {
  auto config = o.suite();
  auto spec = GroupSpec::parse(o.spec);
  auto group = realize(spec, config.group_limits);
  auto format = parse_export_format(o.format);
  if (format == ExportFormat::cayley) {
    if (o.out.empty()) throw std::invalid_argument("cayley export needs --out");
    write_cayley_file(group, o.out);
    return kPass;
  }
  auto g = build(group, config.vertex_cap);
  g.source_descriptor = spec.to_string();
  std::ostringstream s;
  if (format == ExportFormat::dot) write_dot(s, g);
  else if (format == ExportFormat::csv) write_csv(s, g);
  else s << graph_json(g).dump(2) << '\n';
  emit(o, s.str());
  return kPass;
}

int cmd_catalog(const Options& o) {
  auto config = o.suite();
  auto catalog = default_catalog(o.bounds.max_order);
  const bool json = parse_report_format(o.format) == ReportFormat::json;
  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  for (const auto& spec : catalog.specs) {
    std::string vertices;
    try {
      vertices = std::to_string(cyclic_subgroups(realize(spec, config.group_limits)).size());
    } catch (const GroupError& e) {
      vertices = "skipped";
    }
    const std::string family = to_string(spec.family);
    const auto order = spec.expected_order().value_or(0);
    if (json) {
      ordered_json v = vertices == "skipped" ? ordered_json("skipped")
                                             : ordered_json(std::stoull(vertices));
      rows.push_back({{"group", spec.to_string()}, {"order", order}, {"family", family},
                      {"vertices", v}});
    } else {
      s << spec.to_string() << '\t' << order << '\t' << family << '\t' << vertices << '\n';
    }
  }
  if (json) s << ordered_json{{"max_order", o.bounds.max_order}, {"groups", rows}}.dump(2) << '\n';
  emit(o, s.str());
  return kPass;
}

int cmd_verify(const Options& o) {
  auto config = o.suite();
  std::vector<std::string> ids;
  for (const auto& id : o.ids) {
    if (id == "all") ids.insert(ids.end(), theorem_ids().begin(), theorem_ids().end());
    else ids.push_back(id);
  }
  const auto& known = theorem_ids();
  for (const auto& id : ids)
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownTheoremId(id);

  const bool json = parse_report_format(o.format) == ReportFormat::json;
  std::vector<VerificationResult> results;
  bool all_passed = true, anything_tested = false;
  for (const auto& id : ids) {
    results.push_back(run_theorem(id, o.bounds, config));
    all_passed = all_passed && results.back().passed;
    anything_tested = anything_tested || results.back().groups_tested > 0;
    if (!json) write_result_text(std::cerr, results.back());
  }
  const int status = !all_passed ? kFail : anything_tested ? kPass : kSkipOnly;

  std::ostringstream s;
  if (json) {
    ordered_json rs = ordered_json::array();
    for (const auto& r : results) rs.push_back(result_json(r));
    ordered_json j{{"max_order", o.bounds.max_order}, {"max_n", o.bounds.max_n},
                   {"seed", o.seed},                  {"passed", all_passed},
                   {"exit_status", status},           {"results", rs}};
    s << j.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    s << passed << "/" << results.size() << " theorems passed\n";
  }
  emit(o, s.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection graphs of cyclic subgroups of finite groups"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "invariant report for one group");
  analyze_cmd->add_option("spec", o.spec, "group, e.g. Z(4)xZ(2), Q(8), file:cayley:path")
      ->required();
  analyze_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_caps(analyze_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
  verify_cmd->add_option("ids", o.ids, "theorem ids or 'all'")->required();
  verify_cmd->add_option("--max-order", o.bounds.max_order, "catalog order bound")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));
  verify_cmd->add_option("--max-n", o.bounds.max_n, "bound on n for Z(n) checks")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10000000}));
  verify_cmd->add_option("--seed", o.seed, "relabeling seed");
  verify_cmd->add_option("--trials", o.trials, "relabelings per group");
  verify_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_caps(verify_cmd, o);

  auto* export_cmd = app.add_subcommand("export", "write the graph or the Cayley table");
  export_cmd->add_option("spec", o.spec, "group")->required();
  export_cmd->add_option("--format", o.format, "dot, csv, json or cayley")
      ->check(CLI::IsMember({"dot", "csv", "json", "cayley"}))
      ->required();
  add_caps(export_cmd, o);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the default catalog");
  catalog_cmd->add_option("--max-order", o.bounds.max_order, "catalog order bound")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));
  catalog_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_caps(catalog_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*export_cmd) return cmd_export(o);
    return cmd_catalog(o);
  } catch (const UnknownTheoremId& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const GroupError& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
