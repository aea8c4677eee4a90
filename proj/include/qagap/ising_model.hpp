#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qagap/weighted_graph.hpp"

namespace qagap {

// Computational-basis conventions, fixed globally:
//   bit i of a basis index corresponds to qubit i+1 in 1-based labels,
//   bit value 1 means x_i = 1 means spin s_i = +1  (x_i = (1+s_i)/2).
using State = std::uint32_t;

inline int spin_of(State z, int i) { return (z >> i) & 1u ? +1 : -1; }
inline int bit_of(State z, int i) { return (z >> i) & 1u; }

/// |x_1 x_2 ... x_n> with qubit 1 leftmost.
std::string state_to_string(State z, int n);
State state_from_string(const std::string& bits);
int hamming_distance(State a, State b);

/// Diagonal problem Hamiltonian: local fields h_i and couplings J_ij on a
/// graph, plus a constant energy shift.
///   energy(z) = sum_i h_i s_i + sum_{ij} J_ij s_i s_j + offset
class IsingModel {
 public:
  IsingModel() = default;
  IsingModel(int n, std::vector<double> h, std::map<Edge, double> coupling, double offset = 0.0);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }
  const std::vector<double>& fields() const { return h_; }
  const std::map<Edge, double>& couplings() const { return coupling_; }
  double offset() const { return offset_; }

  double energy(State z) const;
  /// All 2^n energies indexed by basis state.
  std::vector<double> energies() const;

  double max_abs_coefficient() const;
  /// Model with h, J and offset divided by the largest coefficient magnitude,
  /// so the largest magnitude of any term is 1.
  IsingModel normalized() const;
  IsingModel scaled(double factor) const;

 private:
  int n_ = 0;
  std::vector<double> h_;
  std::map<Edge, double> coupling_;
  double offset_ = 0.0;
};

}  // namespace qagap
