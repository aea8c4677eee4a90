#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "qagap/ising_model.hpp"

namespace qagap {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Driver Hamiltonian choice.
///   X:  H_X  = -sum_i sigma^x_i
///   XX: H_XX = -sum_i sigma^x_i + lambda sum_{ij in driver edges} sigma^x_i sigma^x_j
/// The signed lambda covers both conventions in the literature; the stoquastic
/// XX driver on the problem edges corresponds to lambda = -1.
struct DriverSpec {
  enum class Kind { X, XX };
  Kind kind = Kind::X;
  double lambda = 0.0;
  std::vector<Edge> edges;

  static DriverSpec x_driver() { return {}; }
  static DriverSpec xx_driver(double lambda, std::vector<Edge> edges) {
    return {Kind::XX, lambda, std::move(edges)};
  }
  bool stoquastic() const { return kind == Kind::X || lambda <= 0.0; }
};

/// Matrix-free H(s) = (1-s) H_driver + s alpha H_ising over the 2^n
/// computational basis. Real symmetric for every s; diagonal at s = 1.
/// apply() is pure and reentrant; instances are immutable after construction.
class SystemHamiltonian {
 public:
  SystemHamiltonian(IsingModel ising, DriverSpec driver, double alpha = 1.0);

  int num_qubits() const { return ising_.num_qubits(); }
  std::size_t dimension() const { return diag_.size(); }
  const IsingModel& ising() const { return ising_; }
  const DriverSpec& driver() const { return driver_; }
  double alpha() const { return alpha_; }
  const std::vector<double>& diagonal() const { return diag_; }

  /// y = H(s) x, O((n + |E_driver|) 2^n).
  void apply(double s, const double* x, double* y) const;
  Vector apply(double s, const Vector& v) const;

  /// Cheap upper bound on the operator norm of H(s), used to scale residual
  /// tolerances.
  double norm_bound(double s) const;

  /// Explicit dense matrix, for small n and cross-checks.
  Matrix assemble_dense(double s) const;

  SystemHamiltonian with_alpha(double alpha) const { return {ising_, driver_, alpha}; }

 private:
  IsingModel ising_;
  DriverSpec driver_;
  double alpha_;
  std::vector<double> diag_;       // problem energies per basis state
  std::vector<State> flip_masks_;  // single-bit masks
  std::vector<State> pair_masks_;  // two-bit masks for XX driver edges
  double max_abs_diag_ = 0.0;
};

/// Uniform superposition 1/sqrt(2^n), the analytic ground state of every
/// stoquastic driver handled here. Throws for drivers whose ground state is
/// not analytically the uniform state.
Vector driver_ground_state(const DriverSpec& driver, int n);

}  // namespace qagap
