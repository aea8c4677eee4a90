#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qagap {

using Edge = std::pair<int, int>;  // normalized so that first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Vertex-weighted undirected graph, the MIS problem input.
/// Edge penalties lambda_ij are the flexible energy-penalty parameters of the
/// MIS-Ising encoding; they may be set per edge or through a uniform default.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<double> weights, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double weight(int v) const { return weights_.at(v); }
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  // Penalty handling. A uniform default and/or per-edge overrides; penalties
  // are considered "set" once either is present.
  void set_uniform_penalty(double lambda);
  void set_penalty(int u, int v, double lambda);
  bool has_penalties() const { return default_penalty_.has_value() || !penalty_overrides_.empty(); }
  std::optional<double> default_penalty() const { return default_penalty_; }
  const std::map<Edge, double>& penalty_overrides() const { return penalty_overrides_; }
  double penalty(int u, int v) const;

  // lambda_ij > min(w_i, w_j) strictly on every edge (uniqueness condition).
  // Returns false when only the weak inequality holds somewhere.
  bool penalties_strict() const;
  void validate() const;

 private:
  int n_ = 0;
  std::vector<double> weights_;
  std::vector<Edge> edges_;
  std::optional<double> default_penalty_;
  std::map<Edge, double> penalty_overrides_;
};

}  // namespace qagap
