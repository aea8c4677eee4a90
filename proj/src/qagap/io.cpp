#include "qagap/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qagap {

json instance_to_json(const WeightedGraph& g) {
  json j;
  j["kind"] = "graph";
  j["n"] = g.num_vertices();
  j["weights"] = g.weights();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.has_penalties()) {
    json pen;
    if (g.default_penalty()) pen["default"] = *g.default_penalty();
    json overrides = json::array();
    for (const auto& [e, lam] : g.penalty_overrides()) overrides.push_back({e.first, e.second, lam});
    if (!overrides.empty()) pen["overrides"] = overrides;
    j["penalties"] = pen;
  }
  return j;
}

json instance_to_json(const IsingModel& m) {
  json j;
  j["kind"] = "ising";
  j["n"] = m.num_qubits();
  j["h"] = m.fields();
  json couplings = json::array();
  for (const auto& [e, v] : m.couplings()) couplings.push_back({e.first, e.second, v});
  j["J"] = couplings;
  if (m.offset() != 0.0) j["offset"] = m.offset();
  return j;
}

Instance instance_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  if (kind == "graph") {
    std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0), e.at(1)));
    WeightedGraph g(n, std::move(weights), std::move(edges));
    if (j.contains("penalties")) {
      const json& pen = j["penalties"];
      if (pen.contains("default")) g.set_uniform_penalty(pen["default"].get<double>());
      if (pen.contains("overrides"))
        for (const auto& o : pen["overrides"])
          g.set_penalty(o.at(0).get<int>(), o.at(1).get<int>(), o.at(2).get<double>());
    }
    return g;
  }
  if (kind == "ising") {
    std::vector<double> h = j.at("h").get<std::vector<double>>();
    std::map<Edge, double> J;
    for (const auto& e : j.at("J"))
      J[make_edge(e.at(0).get<int>(), e.at(1).get<int>())] = e.at(2).get<double>();
    const double offset = j.value("offset", 0.0);
    return IsingModel(n, std::move(h), std::move(J), offset);
  }
  throw std::invalid_argument("unknown instance kind: " + kind);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << j.dump(2) << '\n';
}

DriverSpec driver_from_json(const json& j, const std::vector<Edge>& problem_edges) {
  const std::string kind = j.at("driver").get<std::string>();
  if (kind == "X") return DriverSpec::x_driver();
  if (kind != "XX") throw std::invalid_argument("unknown driver kind: " + kind);
  const double lambda = j.at("lambda").get<double>();
  std::vector<Edge> edges;
  const json& ej = j.at("edges");
  if (ej.is_string() && ej.get<std::string>() == "same-as-problem") {
    edges = problem_edges;
  } else {
    for (const auto& e : ej) edges.push_back(make_edge(e.at(0), e.at(1)));
  }
  return DriverSpec::xx_driver(lambda, std::move(edges));
}

json driver_to_json(const DriverSpec& d) {
  json j;
  if (d.kind == DriverSpec::Kind::X) {
    j["driver"] = "X";
    return j;
  }
  j["driver"] = "XX";
  j["lambda"] = d.lambda;
  json edges = json::array();
  for (const auto& [u, v] : d.edges) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sweep_csv(const SpectralSweep& sweep, std::ostream& os) {
  os << "s";
  for (int k = 0; k < sweep.k; ++k) os << ",E_" << k;
  os << ",gap\n";
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    os << format_double(sweep.grid[i]);
    const auto& vals = sweep.solutions[i].values;
    for (int k = 0; k < sweep.k; ++k) os << ',' << format_double(vals[k]);
    os << ',' << format_double(gap_from_values(vals)) << '\n';
  }
}

void write_traces_csv(const OverlapTraces& traces, std::ostream& os) {
  os << "s";
  for (int k = 0; k < traces.levels_tracked; ++k) os << ",a_" << k;
  for (int k = 0; k < traces.levels_tracked; ++k) os << ",b_" << k;
  os << '\n';
  for (std::size_t i = 0; i < traces.grid.size(); ++i) {
    os << format_double(traces.grid[i]);
    for (int k = 0; k < traces.levels_tracked; ++k) os << ',' << format_double(traces.a(k, i));
    for (int k = 0; k < traces.levels_tracked; ++k) os << ',' << format_double(traces.b(k, i));
    os << '\n';
  }
}

namespace {

json witness_to_json(const WitnessPoint& w) {
  return {{"s", w.s}, {"a0", w.a0}, {"a1", w.a1}, {"b0", w.b0}, {"b1", w.b1}};
}

}  // namespace

json report_to_json(const AntiCrossingReport& rep) {
  json j;
  j["verdict"] = to_string(rep.verdict);
  j["s_star"] = rep.s_star;
  j["min_gap"] = rep.min_gap;
  j["s_cross"] = rep.s_cross;
  j["delta"] = rep.delta;
  j["delta_max"] = rep.delta_max;
  j["gamma"] = rep.gamma;
  j["epsilon"] = rep.epsilon;
  j["gamma_prime"] = rep.gamma_prime;
  j["witness"] = {{"below", witness_to_json(rep.below)},
                  {"at", witness_to_json(rep.at)},
                  {"above", witness_to_json(rep.above)}};
  j["m0"] = rep.m0;
  j["m1"] = rep.m1;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

namespace {

json lens_set_to_json(const LensSet& ls) {
  json j;
  j["anchor_level"] = ls.anchor_level;
  json anchors = json::array();
  for (State z : ls.anchor_states) anchors.push_back(state_to_string(z, ls.n));
  j["anchors"] = anchors;
  json nbrs = json::array();
  for (const auto& nb : ls.neighbors)
    nbrs.push_back(
        {{"bits", state_to_string(nb.state, ls.n)}, {"energy", nb.energy}, {"level", nb.level}});
  j["neighbors"] = nbrs;
  if (ls.cutoff.energy_window)
    j["cutoff"] = {{"energy_window", *ls.cutoff.energy_window}};
  else
    j["cutoff"] = {{"rank_cut", ls.cutoff.rank_cut}};
  return j;
}

}  // namespace

json report_to_json(const PredictionReport& rep) {
  json j;
  j["prediction"] = to_string(rep.prediction);
  j["rationale"] = rep.rationale;
  j["lens_gs"] = lens_set_to_json(rep.gs);
  j["lens_fs"] = lens_set_to_json(rep.fs);
  return j;
}

json report_to_json(const ScalingReport& rep) {
  json j;
  j["alpha"] = rep.alpha;
  j["s_star"] = rep.s_star;
  j["t_star"] = rep.t_star;
  j["t_of_s_star"] = rep.t_of_s_star;
  j["gap1"] = rep.gap1;
  j["gap_alpha"] = rep.gap_alpha;
  j["factor"] = rep.factor;
  j["predicted_factor"] = rep.predicted_factor;
  j["ordering_holds"] = rep.ordering_holds;
  j["sandwich_holds"] = rep.sandwich_holds;
  j["sharp_curvature"] = rep.sharp_curvature;
  j["factor_matches_prediction"] = rep.factor_matches_prediction;
  j["notes"] = rep.notes;
  return j;
}

json report_to_json(const MinGapResult& result) {
  json j;
  j["s_star"] = result.s_star;
  j["min_gap"] = result.min_gap;
  json cands = json::array();
  for (const auto& c : result.candidates) cands.push_back({{"s", c.s}, {"gap", c.gap}});
  j["candidates"] = cands;
  return j;
}

json report_to_json(const ReduceReport& rep, const ConflictGraph& cg) {
  json j;
  j["max_phi"] = rep.max_phi;
  j["a_empty"] = rep.a_empty;
  j["mis_weight"] = rep.mis_weight;
  j["identity_holds"] = rep.identity_holds;
  j["decoded_state"] = state_to_string(rep.decoded_state, cg.source_vars);
  j["decoded_energy"] = rep.decoded_energy;
  j["ground_energy"] = rep.ground_energy;
  j["decoding_optimal"] = rep.decoding_optimal;
  j["vertices"] = cg.graph.num_vertices();
  json terms = json::array();
  for (const auto& t : cg.terms) terms.push_back(term_to_string(t));
  j["terms"] = terms;
  return j;
}

std::string conflict_graph_to_dot(const ConflictGraph& cg) {
  std::ostringstream os;
  os << "graph conflict {\n";
  for (int i = 0; i < cg.graph.num_vertices(); ++i)
    os << "  v" << i << " [label=\"" << term_to_string(cg.terms[i]) << "\\nw="
       << cg.graph.weight(i) << "\"];\n";
  for (const auto& [u, v] : cg.graph.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qagap
