#pragma once

#include <vector>

#include "qagap/ising_model.hpp"
#include "qagap/weighted_graph.hpp"

namespace qagap {

/// Path graph 1-2-3-4-5 with weights (1, 1.5, 1, w4, 1). The two paper
/// instances use w4 = 1.49 and w4 = 1.51; their optima are complementary.
WeightedGraph gen_chain5(double w4);

/// Path of 7 vertices, weight 1 everywhere except w_4 = 1.99. The optimum
/// {1,3,5,7} (weight 4) competes with a 4-fold degenerate local maximum of
/// weight 3.99.
WeightedGraph gen_chain7();

/// Ferromagnetic loop of n vertices (two parallel branches joining the end
/// vertices): fields zero except R-1 and -R at the ends, couplings -R except
/// the pair adjacent to the -R end, each -R/2. Unique ground state, 2-fold
/// degenerate first excited manifold.
IsingModel gen_loop_gadget(int n, double R);

/// MIS-Ising encoding: h_i = sum_{j in nbr(i)} lambda_ij - 2 w_i,
/// J_ij = lambda_ij, offset fixed so that energy(z) = -4 Y(x(z)) exactly.
/// Requires penalties set; throws if the strict inequality fails.
IsingModel mis_to_ising(const WeightedGraph& g);

struct MisResult {
  double best_weight = 0.0;
  std::vector<std::vector<int>> best_sets;  // every maximizing set, ties within 1e-12
};

/// Exact optimum by enumerating all independent subsets (n <= 24).
MisResult brute_force_mis(const WeightedGraph& g);

struct SpectrumLevel {
  double energy = 0.0;
  std::vector<State> states;
};

/// All 2^n energies grouped by equal energy within absolute tolerance 1e-12,
/// ascending. The oracle behind every spectral module (n <= 24).
std::vector<SpectrumLevel> brute_force_ising(const IsingModel& m);

/// Default penalty rule lambda_ij = min(w_i, w_j) + 1 for any edge without an
/// explicit value; returns a copy with penalties set.
WeightedGraph with_default_penalties(WeightedGraph g, double extra = 1.0);

}  // namespace qagap
