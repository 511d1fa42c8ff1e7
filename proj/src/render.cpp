#include "cycgraph/render.hpp"

#include <stdexcept>

namespace cycgraph {

using nlohmann::ordered_json;

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  if (name == "cayley") return ExportFormat::cayley;
  throw std::invalid_argument("unknown export format '" + name + "'");
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string vertex_label(const CyclicSubgroup& h) {
  return "⟨" + std::to_string(h.generator) + "⟩ ord=" + std::to_string(h.order());
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

template <typename T>
ordered_json measured(const Measured<T>& m) {
  switch (m.status) {
    case Status::computed: return m.value;
    case Status::skipped: return "skipped";
    case Status::undefined: break;
  }
  return "undefined";
}

template <typename T>
std::string measured_text(const Measured<T>& m) {
  switch (m.status) {
    case Status::computed:
      if constexpr (std::is_same_v<T, bool>) return m.value ? "yes" : "no";
      else return std::to_string(m.value);
    case Status::skipped: return "skipped";
    case Status::undefined: break;
  }
  return "undefined";
}

std::string components_text(const std::vector<ComponentShape>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(cs[i].size) + (cs[i].is_clique ? ",clique)" : ",-)");
  }
  return "{" + s + "}";
}

}  // namespace

void write_dot(std::ostream& out, const IntersectionGraph& g) {
  out << "graph " << quoted(g.source_descriptor) << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  " << i << " [label=" << quoted(vertex_label(g.vertices[i])) << "];\n";
  for (auto [u, v] : g.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void write_csv(std::ostream& out, const IntersectionGraph& g) {
  out << "u,v\n";
  for (auto [u, v] : g.graph.edges()) out << u << ',' << v << '\n';
}

ordered_json vertices_json(const IntersectionGraph& g) {
  ordered_json vs = ordered_json::array();
  for (const auto& h : g.vertices)
    vs.push_back({{"generator", h.generator}, {"order", h.order()}, {"elements", h.elements}});
  return vs;
}

ordered_json graph_json(const IntersectionGraph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
  return {{"group", g.source_descriptor}, {"vertices", vertices_json(g)}, {"edges", edges}};
}

ordered_json report_json(const InvariantReport& r) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.component_structure)
    comps.push_back({{"size", c.size}, {"is_clique", c.is_clique}});
  ordered_json girth = r.girth ? ordered_json(*r.girth) : ordered_json("inf");
  return {
      {"vertex_count", r.vertex_count},
      {"edge_count", r.edge_count},
      {"is_totally_disconnected", r.shape.totally_disconnected},
      {"is_complete", r.shape.complete},
      {"is_star", r.shape.star},
      {"is_path", r.shape.path},
      {"is_cycle", r.shape.cycle},
      {"is_bipartite", r.is_bipartite},
      {"is_acyclic", r.is_acyclic},
      {"has_triangle", r.has_triangle},
      {"girth", girth},
      {"is_planar", measured(r.is_planar)},
      {"is_regular", measured(r.is_regular)},
      {"independence_number", measured(r.independence_number)},
      {"clique_cover_number", measured(r.clique_cover_number)},
      {"domination_number", measured(r.domination_number)},
      {"weakly_alpha_perfect", measured(r.weakly_alpha_perfect)},
      {"component_structure", comps},
  };
}

ordered_json result_json(const VerificationResult& r) {
  ordered_json cx = ordered_json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back({{"group", c.group}, {"expected", c.expected}, {"observed", c.observed}});
  return {
      {"theorem_id", r.theorem_id},
      {"domain_description", r.domain_description},
      {"passed", r.passed},
      {"groups_tested", r.groups_tested},
      {"groups_skipped", r.groups_skipped},
      {"groups_excluded", r.groups_excluded},
      {"counterexamples", cx},
      {"skipped", r.skipped},
      {"notes", r.notes},
      {"elapsed_ms", r.elapsed.count()},
  };
}

void write_report_text(std::ostream& out, const std::string& spec, const IntersectionGraph& g,
                       const InvariantReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "group          " << spec << '\n'
      << "vertices       " << r.vertex_count << '\n'
      << "edges          " << r.edge_count << '\n'
      << "null graph     " << yn(r.shape.totally_disconnected) << '\n'
      << "complete       " << yn(r.shape.complete) << '\n'
      << "star           " << yn(r.shape.star) << '\n'
      << "path           " << yn(r.shape.path) << '\n'
      << "cycle          " << yn(r.shape.cycle) << '\n'
      << "bipartite      " << yn(r.is_bipartite) << '\n'
      << "acyclic        " << yn(r.is_acyclic) << '\n'
      << "triangle       " << yn(r.has_triangle) << '\n'
      << "girth          " << (r.girth ? std::to_string(*r.girth) : "inf") << '\n'
      << "planar         " << measured_text(r.is_planar) << '\n'
      << "regular        " << measured_text(r.is_regular) << '\n'
      << "alpha          " << measured_text(r.independence_number) << '\n'
      << "theta          " << measured_text(r.clique_cover_number) << '\n'
      << "gamma          " << measured_text(r.domination_number) << '\n'
      << "alpha = theta  " << measured_text(r.weakly_alpha_perfect) << '\n'
      << "components     " << components_text(r.component_structure) << '\n';
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << "  " << vertex_label(g.vertices[i]) << '\n';
}

void write_result_text(std::ostream& out, const VerificationResult& r) {
  out << (r.passed ? "PASS " : "FAIL ") << r.theorem_id << "  tested=" << r.groups_tested
      << " skipped=" << r.groups_skipped << " excluded=" << r.groups_excluded << "  "
      << r.elapsed.count() << " ms\n"
      << "  domain: " << r.domain_description << '\n';
  for (const auto& c : r.counterexamples)
    out << "  counterexample " << c.group << ": expected " << c.expected << ", observed "
        << c.observed << '\n';
  for (const auto& s : r.skipped) out << "  skipped " << s << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

}  // namespace cycgraph
