#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycgraph/graph.hpp"
#include "cycgraph/invariants.hpp"
#include "cycgraph/theorems.hpp"

namespace cycgraph {

enum class ExportFormat { dot, csv, json, cayley };
enum class ReportFormat { json, text };

ExportFormat parse_export_format(const std::string& name);
ReportFormat parse_report_format(const std::string& name);

// "<g> ord=k" where g is the generator's element index.
std::string vertex_label(const CyclicSubgroup& h);

void write_dot(std::ostream& out, const IntersectionGraph& g);
void write_csv(std::ostream& out, const IntersectionGraph& g);
nlohmann::ordered_json graph_json(const IntersectionGraph& g);

nlohmann::ordered_json report_json(const InvariantReport& r);
nlohmann::ordered_json vertices_json(const IntersectionGraph& g);
nlohmann::ordered_json result_json(const VerificationResult& r);

void write_report_text(std::ostream& out, const std::string& spec, const IntersectionGraph& g,
                       const InvariantReport& r);
void write_result_text(std::ostream& out, const VerificationResult& r);

}  // namespace cycgraph
