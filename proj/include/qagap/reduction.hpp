#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qagap/instances.hpp"

namespace qagap {

/// Pseudo-boolean objective Y(x) = sum c_i x_i + sum q_ij x_i x_j + constant
/// over x in {0,1}^n, sense: maximize.
struct Qubo {
  int n = 0;
  std::vector<double> linear;
  std::map<Edge, double> quadratic;
  double constant = 0.0;

  double evaluate(State x) const;
};

struct Literal {
  int var = 0;
  bool negated = false;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Term = std::vector<Literal>;  // sorted, no variable twice

std::string term_to_string(const Term& t);

/// Polynomial over literals with all-positive coefficients plus a constant.
struct Posiform {
  int n = 0;
  double a_empty = 0.0;
  std::vector<std::pair<Term, double>> terms;  // deterministic order, a_T > 0

  double evaluate(State x) const;
};

/// Weighted graph whose vertices are the nonconstant posiform terms, weight
/// a_T, edges between conflicting terms (u in T, complement of u in T').
struct ConflictGraph {
  WeightedGraph graph;
  std::vector<Term> terms;  // vertex i carries terms[i]
  double a_empty = 0.0;
  int source_vars = 0;
};

/// Spin -> boolean change of variables (s_i = 2 x_i - 1), negated and divided
/// by 4 so that energy(z) = -4 Y(x(z)) holds exactly; maximizing Y is
/// minimizing the Ising energy.
Qubo ising_to_qubo(const IsingModel& m);

/// Canonical posiform: -c x_i becomes c (complement of x_i) - c, and a
/// negative quadratic complements the lower-index variable. Like terms merge;
/// zero coefficients drop. Evaluation is preserved for every assignment.
Posiform qubo_to_posiform(const Qubo& q);

ConflictGraph conflict_graph(const Posiform& p);

struct ReduceReport {
  double max_phi = 0.0;      // exhaustive posiform maximum
  double a_empty = 0.0;
  double mis_weight = 0.0;   // brute-force MIS of the conflict graph
  bool identity_holds = false;  // max phi == a_empty + mis weight
  State decoded_state = 0;   // assignment recovered from the primary MIS
  double decoded_energy = 0.0;
  double ground_energy = 0.0;
  bool decoding_optimal = false;
};

/// Full pipeline with exhaustive verification (n <= 12): the Boros-Hammer
/// identity and the decode round trip. A mismatch is a pipeline bug and
/// throws.
std::pair<ConflictGraph, ReduceReport> reduce_and_verify(const IsingModel& m);

/// Conflict graph -> MIS-Ising Hamiltonian with the default penalty rule
/// lambda = min(w_i, w_j) + extra (strict by construction since a_T > 0).
IsingModel reduced_instance_to_mis_ising(const ConflictGraph& cg, double extra = 1.0);

/// Assignment consistent with the selected terms' literals; variables not
/// forced by the MIS are completed by greedy energy descent on the original
/// model.
State decode_mis_selection(const ConflictGraph& cg, const std::vector<int>& selected,
                           const IsingModel& original);

}  // namespace qagap
