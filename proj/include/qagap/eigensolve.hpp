#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qagap/system_hamiltonian.hpp"

namespace qagap {

struct EigenSolution {
  double s = 0.0;
  Vector values;   // ascending lowest-k eigenvalues
  Matrix vectors;  // matching orthonormal eigenvectors, one per column
  Vector residuals;  // ||H v - E v|| per pair, diagnostic
  int iterations = 0;
};

struct SolverOptions {
  enum class Method { Auto, Dense, Lanczos };
  Method method = Method::Auto;
  int dense_threshold = 12;  // qubits; dense symmetric solve at or below
  double tol = 1e-9;         // residual tolerance relative to the norm bound of H(s)
  int max_basis = 480;       // Krylov basis cap before a thick restart
  int max_restarts = 60;
  int block = 0;  // 0 = auto, max(k + 2, 2)
  std::uint64_t seed = 20250810ull;
};

/// Iterative solver gave up; carries the worst residual for diagnosis.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double s, double worst_residual)
      : std::runtime_error(what), s_value(s), worst_residual(worst_residual) {}
  double s_value;
  double worst_residual;
};

/// k lowest eigenpairs of H(s). Dense symmetric solve when n <= dense_threshold,
/// otherwise block Lanczos on the matrix-free apply with full
/// reorthogonalization; deterministic given the seed. An optional warm start
/// supplies initial block columns (e.g. the previous grid point's vectors).
EigenSolution lowest_eigenpairs(const SystemHamiltonian& sys, double s, int k,
                                const SolverOptions& opts = {}, const Matrix* warm_start = nullptr);

}  // namespace qagap
