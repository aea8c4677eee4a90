#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "qagap/anticross.hpp"
#include "qagap/lens.hpp"
#include "qagap/reduction.hpp"
#include "qagap/scaling.hpp"

namespace qagap {

using json = nlohmann::json;

// Instance files hold either a weighted graph ("kind":"graph") or an Ising
// model ("kind":"ising"). Vertex indices are 0-based in files and 1-based in
// human-facing reports.
using Instance = std::variant<WeightedGraph, IsingModel>;

json instance_to_json(const WeightedGraph& g);
json instance_to_json(const IsingModel& m);
Instance instance_from_json(const json& j);
Instance load_instance(const std::string& path);
void save_json(const json& j, const std::string& path);

/// {"driver":"X"} or {"driver":"XX","lambda":...,"edges":[[i,j],...]|"same-as-problem"}.
/// "same-as-problem" resolves against the supplied problem edges.
DriverSpec driver_from_json(const json& j, const std::vector<Edge>& problem_edges);
json driver_to_json(const DriverSpec& d);

/// 17 significant digits: round-trips doubles exactly.
std::string format_double(double v);

void write_sweep_csv(const SpectralSweep& sweep, std::ostream& os);
void write_traces_csv(const OverlapTraces& traces, std::ostream& os);

json report_to_json(const AntiCrossingReport& rep);
json report_to_json(const PredictionReport& rep);
json report_to_json(const ScalingReport& rep);
json report_to_json(const MinGapResult& result);
json report_to_json(const ReduceReport& rep, const ConflictGraph& cg);

std::string conflict_graph_to_dot(const ConflictGraph& cg);

}  // namespace qagap
