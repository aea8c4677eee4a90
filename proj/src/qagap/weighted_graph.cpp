#include "qagap/weighted_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace qagap {

WeightedGraph::WeightedGraph(int n, std::vector<double> weights, std::vector<Edge> edges)
    : n_(n), weights_(std::move(weights)), edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  validate();
}

void WeightedGraph::validate() const {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(weights_.size()) != n_)
    throw std::invalid_argument("weights length != vertex count");
  for (int i = 0; i < n_; ++i)
    if (!(weights_[i] > 0.0))
      throw std::invalid_argument("vertex weight must be positive (vertex " + std::to_string(i + 1) + ")");
  std::set<Edge> seen;
  for (const auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
  }
  for (const auto& [e, lam] : penalty_overrides_) {
    if (!std::binary_search(edges_.begin(), edges_.end(), e))
      throw std::invalid_argument("penalty override on non-edge");
    (void)lam;
  }
}

bool WeightedGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<int> WeightedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void WeightedGraph::set_uniform_penalty(double lambda) {
  default_penalty_ = lambda;
  penalty_overrides_.clear();
}

void WeightedGraph::set_penalty(int u, int v, double lambda) {
  Edge e = make_edge(u, v);
  if (!has_edge(u, v)) throw std::invalid_argument("penalty on non-edge");
  penalty_overrides_[e] = lambda;
}

double WeightedGraph::penalty(int u, int v) const {
  Edge e = make_edge(u, v);
  if (auto it = penalty_overrides_.find(e); it != penalty_overrides_.end()) return it->second;
  if (default_penalty_) return *default_penalty_;
  throw std::logic_error("edge penalties not set");
}

bool WeightedGraph::penalties_strict() const {
  for (const auto& [u, v] : edges_) {
    double lam = penalty(u, v);
    if (!(lam > std::min(weights_[u], weights_[v]))) return false;
  }
  return true;
}

}  // namespace qagap
