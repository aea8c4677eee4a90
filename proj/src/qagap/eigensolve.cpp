#include "qagap/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace qagap {

namespace {

void fix_signs(Matrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index imax = 0;
    vectors.col(c).cwiseAbs().maxCoeff(&imax);
    if (vectors(imax, c) < 0.0) vectors.col(c) = -vectors.col(c);
  }
}

Vector compute_residuals(const SystemHamiltonian& sys, double s, const Vector& values,
                         const Matrix& vectors) {
  Vector res(values.size());
  for (Eigen::Index c = 0; c < values.size(); ++c) {
    Vector hv = sys.apply(s, Vector(vectors.col(c)));
    res[c] = (hv - values[c] * vectors.col(c)).norm();
  }
  return res;
}

EigenSolution dense_solve(const SystemHamiltonian& sys, double s, int k) {
  Matrix H = sys.assemble_dense(s);
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  EigenSolution sol;
  sol.s = s;
  sol.values = es.eigenvalues().head(k);
  sol.vectors = es.eigenvectors().leftCols(k);
  fix_signs(sol.vectors);
  sol.residuals = compute_residuals(sys, s, sol.values, sol.vectors);
  return sol;
}

// y <- y - V (V^T y), twice for stability
void reorthogonalize(const Matrix& V, Eigen::Index used, Matrix& W) {
  if (used == 0) return;
  auto Vu = V.leftCols(used);
  for (int pass = 0; pass < 2; ++pass) W.noalias() -= Vu * (Vu.transpose() * W);
}

// Orthonormalize the columns of W in place; rank-deficient columns are
// replaced with fresh random directions orthogonal to V and W.
void orthonormalize_block(const Matrix& V, Eigen::Index used, Matrix& W, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Eigen::Index c = 0; c < W.cols(); ++c) {
    for (int attempt = 0; attempt < 5; ++attempt) {
      // orthogonalize against V and the already finished columns of W
      for (int pass = 0; pass < 2; ++pass) {
        if (used > 0) {
          auto Vu = V.leftCols(used);
          W.col(c).noalias() -= Vu * (Vu.transpose() * W.col(c));
        }
        if (c > 0) {
          auto Wl = W.leftCols(c);
          W.col(c).noalias() -= Wl * (Wl.transpose() * W.col(c));
        }
      }
      const double nrm = W.col(c).norm();
      if (nrm > 1e-8) {
        W.col(c) /= nrm;
        break;
      }
      for (Eigen::Index r = 0; r < W.rows(); ++r) W(r, c) = gauss(rng);
    }
  }
}

EigenSolution lanczos_solve(const SystemHamiltonian& sys, double s, int k,
                            const SolverOptions& opts, const Matrix* warm_start) {
  const Eigen::Index dim = static_cast<Eigen::Index>(sys.dimension());
  const int block = std::min<Eigen::Index>(
      dim, opts.block > 0 ? opts.block : std::max(k + 2, 2));
  const Eigen::Index max_basis = std::min<Eigen::Index>(dim, std::max<int>(opts.max_basis, 4 * block));
  const double scale = std::max(sys.norm_bound(s), 1.0);

  // deterministic per (seed, s) start
  std::uint64_t mix = opts.seed ^ std::hash<double>{}(s);
  std::mt19937_64 rng(mix);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Matrix V(dim, max_basis), HV(dim, max_basis);
  Eigen::Index used = 0;

  Matrix block0(dim, block);
  Eigen::Index warm_cols = 0;
  if (warm_start && warm_start->rows() == dim && warm_start->cols() > 0) {
    warm_cols = std::min<Eigen::Index>(warm_start->cols(), block);
    block0.leftCols(warm_cols) = warm_start->leftCols(warm_cols);
  }
  for (Eigen::Index c = warm_cols; c < block; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) block0(r, c) = gauss(rng);
  orthonormalize_block(V, 0, block0, rng);

  Matrix current = block0;
  EigenSolution sol;
  sol.s = s;
  double worst = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    bool converged = false;
    while (used + block <= max_basis) {
      V.middleCols(used, block) = current;
      for (Eigen::Index c = 0; c < block; ++c) {
        Vector hv(dim);
        sys.apply(s, current.col(c).data(), hv.data());
        HV.col(used + c) = hv;
      }
      used += block;
      ++sol.iterations;

      // Rayleigh-Ritz on the current basis
      Matrix T = V.leftCols(used).transpose() * HV.leftCols(used);
      T = 0.5 * (T + T.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Matrix> es(T);
      const int kk = std::min<Eigen::Index>(k, used);
      Matrix Y = es.eigenvectors().leftCols(kk);
      Vector theta = es.eigenvalues().head(kk);
      Matrix X = V.leftCols(used) * Y;
      Matrix R = HV.leftCols(used) * Y - X * theta.asDiagonal();
      worst = R.colwise().norm().maxCoeff();
      if (kk == k && worst <= opts.tol * scale) {
        sol.values = theta;
        sol.vectors = X;
        converged = true;
        break;
      }
      // next block: residual directions of the lowest pairs
      Matrix next(dim, block);
      for (Eigen::Index c = 0; c < block; ++c) next.col(c) = R.col(c % kk);
      reorthogonalize(V, used, next);
      orthonormalize_block(V, used, next, rng);
      current = next;
    }
    if (converged) break;
    if (restart == opts.max_restarts)
      throw SolverError("lanczos failed to converge (worst residual " + std::to_string(worst) +
                            " at s=" + std::to_string(s) + ")",
                        s, worst);
    // thick restart: keep the best Ritz vectors as the new basis
    Matrix T = V.leftCols(used).transpose() * HV.leftCols(used);
    T = 0.5 * (T + T.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(T);
    const Eigen::Index keep = std::min<Eigen::Index>(used, std::max<Eigen::Index>(2 * k, block + k));
    Matrix Y = es.eigenvectors().leftCols(keep);
    Matrix X = V.leftCols(used) * Y;
    Matrix HX = HV.leftCols(used) * Y;
    V.leftCols(keep) = X;
    HV.leftCols(keep) = HX;
    used = keep;
    // continue from the lowest residual directions
    Matrix R = HX.leftCols(std::min<Eigen::Index>(k, keep)) -
               X.leftCols(std::min<Eigen::Index>(k, keep)) *
                   es.eigenvalues().head(std::min<Eigen::Index>(k, keep)).asDiagonal();
    Matrix next(dim, block);
    for (Eigen::Index c = 0; c < block; ++c) next.col(c) = R.col(c % R.cols());
    reorthogonalize(V, used, next);
    orthonormalize_block(V, used, next, rng);
    current = next;
  }

  fix_signs(sol.vectors);
  sol.residuals = compute_residuals(sys, s, sol.values, sol.vectors);
  return sol;
}

}  // namespace

EigenSolution lowest_eigenpairs(const SystemHamiltonian& sys, double s, int k,
                                const SolverOptions& opts, const Matrix* warm_start) {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("s out of [0,1]");
  const Eigen::Index dim = static_cast<Eigen::Index>(sys.dimension());
  if (k < 1 || k > dim) throw std::invalid_argument("k out of range");

  const bool dense = opts.method == SolverOptions::Method::Dense ||
                     (opts.method == SolverOptions::Method::Auto &&
                      sys.num_qubits() <= opts.dense_threshold);
  if (dense) return dense_solve(sys, s, k);
  return lanczos_solve(sys, s, k, opts, warm_start);
}

}  // namespace qagap
