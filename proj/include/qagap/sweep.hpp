#pragma once

#include <utility>
#include <vector>

#include "qagap/eigensolve.hpp"

namespace qagap {

struct SpectralSweep {
  std::vector<double> grid;              // ascending s values covering [0,1]
  std::vector<EigenSolution> solutions;  // one per grid point, phase aligned
  int k = 0;                             // levels tracked
};

/// Uniform grid on [0,1] inclusive of both endpoints.
std::vector<double> make_grid(double step);

/// Instantaneous gap E_1 - E_0 with eigenvalues within cluster_tol treated as
/// one level.
double gap_from_values(const Vector& values, double cluster_tol = 1e-10);

struct SweepOptions {
  SolverOptions solver;
  int workers = 0;  // 0 = hardware concurrency (capped at 8)
};

/// Lowest-k eigenpairs per grid point. Points are solved independently in a
/// worker pool; eigenvector signs are then aligned sequentially so that the
/// overlap with the previous point's same-index vector is non-negative (the
/// s=0 point aligns against the uniform vector).
SpectralSweep sweep(const SystemHamiltonian& sys, const std::vector<double>& grid, int k,
                    const SweepOptions& opts = {});

struct GapPoint {
  double s = 0.0;
  double gap = 0.0;
};

struct MinGapResult {
  double s_star = 0.0;
  double min_gap = 0.0;
  std::vector<GapPoint> candidates;  // refined local minima within 10% of the best, best first
  std::vector<GapPoint> coarse;      // coarse grid gap curve
};

struct MinGapOptions {
  double grid_step = 1e-3;
  double refine_tol = 1e-6;  // golden-section stops at |delta s| <= this
  int k = 2;
  SolverOptions solver;
  int workers = 0;
};

/// Coarse scan then golden-section refinement of gap(s) over [0,1) (s = 1
/// excluded). All local minima within 10% of the best gap are refined and
/// reported; the primary result is the smallest.
MinGapResult locate_min_gap(const SystemHamiltonian& sys, const MinGapOptions& opts = {});

struct GapFit {
  double c = 0.0;   // gap ~ A exp(c n)
  double r2 = 0.0;  // goodness of the ln-linear fit
};

/// Least-squares slope of ln(gap) against n; needs >= 4 points, positive gaps.
GapFit fit_gap_exponent(const std::vector<std::pair<int, double>>& points);

}  // namespace qagap
