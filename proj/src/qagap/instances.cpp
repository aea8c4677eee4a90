#include "qagap/instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qagap {

WeightedGraph gen_chain5(double w4) {
  if (!(w4 > 0.0)) throw std::invalid_argument("w4 must be positive");
  return WeightedGraph(5, {1.0, 1.5, 1.0, w4, 1.0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

WeightedGraph gen_chain7() {
  std::vector<double> w(7, 1.0);
  w[3] = 1.99;
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) edges.push_back({i, i + 1});
  return WeightedGraph(7, std::move(w), std::move(edges));
}

IsingModel gen_loop_gadget(int n, double R) {
  if (R < 4.0) throw std::invalid_argument("loop gadget requires R >= 4");
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("loop gadget requires even n >= 4 (two equal branches)");
  std::vector<double> h(n, 0.0);
  h[0] = R - 1.0;
  h[n - 1] = -R;
  // two parallel branches: 0,1,3,5,...,n-1 and 0,2,4,...,n-1
  std::map<Edge, double> J;
  auto add_branch = [&](int first) {
    int prev = 0;
    for (int v = first; v < n - 1; v += 2) {
      J[make_edge(prev, v)] = -R;
      prev = v;
    }
    J[make_edge(prev, n - 1)] = -R / 2.0;  // the pair adjacent to the -R end
  };
  add_branch(1);
  add_branch(2);
  return IsingModel(n, std::move(h), std::move(J));
}

IsingModel mis_to_ising(const WeightedGraph& g) {
  if (g.num_edges() > 0 && !g.has_penalties())
    throw std::logic_error("mis_to_ising: edge penalties not set");
  if (!g.penalties_strict())
    throw std::invalid_argument(
        "mis_to_ising: penalty must exceed min(w_i, w_j) strictly on every edge "
        "(weak inequality allows degenerate optima)");
  const int n = g.num_vertices();
  std::vector<double> h(n, 0.0);
  std::map<Edge, double> J;
  double lam_sum = 0.0;
  for (const auto& [u, v] : g.edges()) {
    const double lam = g.penalty(u, v);
    J[{u, v}] = lam;
    h[u] += lam;
    h[v] += lam;
    lam_sum += lam;
  }
  double w_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    h[i] -= 2.0 * g.weight(i);
    w_sum += g.weight(i);
  }
  // offset makes energy(z) = -4 Y(x) hold exactly for every assignment
  const double offset = lam_sum - 2.0 * w_sum;
  return IsingModel(n, std::move(h), std::move(J), offset);
}

namespace {

void enumerate_independent(const WeightedGraph& g, const std::vector<State>& nbr_mask, int v,
                           State chosen, State blocked, double weight, double remaining,
                           MisResult& out) {
  constexpr double kTieTol = 1e-12;
  if (weight + remaining < out.best_weight - kTieTol) return;  // cannot beat best
  if (v == g.num_vertices()) {
    if (weight > out.best_weight + kTieTol) {
      out.best_weight = weight;
      out.best_sets.clear();
    }
    if (std::abs(weight - out.best_weight) <= kTieTol) {
      std::vector<int> set;
      for (int i = 0; i < g.num_vertices(); ++i)
        if (chosen & (State{1} << i)) set.push_back(i);
      out.best_sets.push_back(std::move(set));
    }
    return;
  }
  const double rem = remaining - g.weight(v);
  if (!(blocked & (State{1} << v)))
    enumerate_independent(g, nbr_mask, v + 1, chosen | (State{1} << v), blocked | nbr_mask[v],
                          weight + g.weight(v), rem, out);
  enumerate_independent(g, nbr_mask, v + 1, chosen, blocked, weight, rem, out);
}

}  // namespace

MisResult brute_force_mis(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("brute_force_mis: n > 24");
  std::vector<State> nbr_mask(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbr_mask[u] |= State{1} << v;
    nbr_mask[v] |= State{1} << u;
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += g.weight(i);
  MisResult out;
  out.best_weight = 0.0;
  enumerate_independent(g, nbr_mask, 0, 0, 0, 0.0, total, out);
  return out;
}

std::vector<SpectrumLevel> brute_force_ising(const IsingModel& m) {
  if (m.num_qubits() > 24) throw std::invalid_argument("brute_force_ising: n > 24");
  constexpr double kGroupTol = 1e-12;
  const std::vector<double> E = m.energies();
  std::vector<State> order(E.size());
  for (std::size_t z = 0; z < order.size(); ++z) order[z] = static_cast<State>(z);
  std::sort(order.begin(), order.end(), [&](State a, State b) {
    if (E[a] != E[b]) return E[a] < E[b];
    return a < b;
  });
  std::vector<SpectrumLevel> levels;
  for (State z : order) {
    if (!levels.empty() && std::abs(E[z] - levels.back().energy) <= kGroupTol) {
      levels.back().states.push_back(z);
    } else {
      levels.push_back({E[z], {z}});
    }
  }
  return levels;
}

WeightedGraph with_default_penalties(WeightedGraph g, double extra) {
  for (const auto& [u, v] : g.edges()) {
    bool has_override = g.penalty_overrides().count(make_edge(u, v)) > 0;
    if (!has_override && !g.default_penalty())
      g.set_penalty(u, v, std::min(g.weight(u), g.weight(v)) + extra);
  }
  return g;
}

}  // namespace qagap
