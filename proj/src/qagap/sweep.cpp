#include "qagap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace qagap {

namespace {

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void parallel_for(int workers, std::size_t count, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool solver_is_dense(const SystemHamiltonian& sys, const SolverOptions& opts) {
  return opts.method == SolverOptions::Method::Dense ||
         (opts.method == SolverOptions::Method::Auto &&
          sys.num_qubits() <= opts.dense_threshold);
}

}  // namespace

std::vector<double> make_grid(double step) {
  if (!(step > 0.0 && step < 1.0)) throw std::invalid_argument("bad grid step");
  std::vector<double> grid;
  const int count = static_cast<int>(std::round(1.0 / step));
  grid.reserve(count + 1);
  for (int i = 0; i < count; ++i) grid.push_back(i * step);
  grid.push_back(1.0);
  return grid;
}

double gap_from_values(const Vector& values, double cluster_tol) {
  for (Eigen::Index i = 1; i < values.size(); ++i)
    if (values[i] - values[0] > cluster_tol) return values[i] - values[0];
  return values.size() > 1 ? values[values.size() - 1] - values[0] : 0.0;
}

SpectralSweep sweep(const SystemHamiltonian& sys, const std::vector<double>& grid, int k,
                    const SweepOptions& opts) {
  if (grid.empty() || !std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("grid must be ascending");
  if (grid.front() < 0.0 || grid.back() > 1.0) throw std::invalid_argument("grid outside [0,1]");

  SpectralSweep out;
  out.grid = grid;
  out.k = k;
  out.solutions.resize(grid.size());

  const bool dense = solver_is_dense(sys, opts.solver);
  if (dense) {
    parallel_for(effective_workers(opts.workers), grid.size(), [&](std::size_t i) {
      try {
        out.solutions[i] = lowest_eigenpairs(sys, grid[i], k, opts.solver);
      } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " [sweep point s=" + std::to_string(grid[i]) + "]",
                          grid[i], e.worst_residual);
      }
    });
  } else {
    // iterative path: sequential with warm starts from the previous point
    const Matrix* warm = nullptr;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out.solutions[i] = lowest_eigenpairs(sys, grid[i], k, opts.solver, warm);
      warm = &out.solutions[i].vectors;
    }
  }

  // phase alignment
  const Vector uniform =
      Vector::Constant(sys.dimension(), 1.0 / std::sqrt(static_cast<double>(sys.dimension())));
  for (std::size_t i = 0; i < out.solutions.size(); ++i) {
    Matrix& vecs = out.solutions[i].vectors;
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
      const double ref = i == 0 ? uniform.dot(vecs.col(c))
                                : out.solutions[i - 1].vectors.col(c).dot(vecs.col(c));
      if (ref < 0.0) vecs.col(c) = -vecs.col(c);
    }
  }
  return out;
}

namespace {

struct GapEvaluator {
  const SystemHamiltonian& sys;
  const MinGapOptions& opts;
  int k_solve;
  mutable Matrix warm;
  mutable bool has_warm = false;

  double operator()(double s) const {
    const Matrix* w = has_warm ? &warm : nullptr;
    EigenSolution sol = lowest_eigenpairs(sys, s, k_solve, opts.solver, w);
    warm = sol.vectors;
    has_warm = true;
    return gap_from_values(sol.values);
  }
};

}  // namespace

MinGapResult locate_min_gap(const SystemHamiltonian& sys, const MinGapOptions& opts) {
  const std::vector<double> grid = make_grid(opts.grid_step);
  const int k_solve =
      std::min<int>(std::max(opts.k, 2) + 2, static_cast<int>(sys.dimension()));

  std::vector<double> gaps(grid.size());
  const bool dense = solver_is_dense(sys, opts.solver);
  if (dense) {
    parallel_for(effective_workers(opts.workers), grid.size(), [&](std::size_t i) {
      EigenSolution sol = lowest_eigenpairs(sys, grid[i], k_solve, opts.solver);
      gaps[i] = gap_from_values(sol.values);
    });
  } else {
    Matrix warm;
    bool has_warm = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EigenSolution sol =
          lowest_eigenpairs(sys, grid[i], k_solve, opts.solver, has_warm ? &warm : nullptr);
      warm = sol.vectors;
      has_warm = true;
      gaps[i] = gap_from_values(sol.values);
    }
  }

  MinGapResult result;
  result.coarse.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) result.coarse.push_back({grid[i], gaps[i]});

  // local minima of the coarse curve, s = 1 excluded
  const std::size_t last = grid.size() - 1;  // index of s = 1
  std::vector<std::size_t> minima;
  double best_coarse = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < last; ++i) {
    const double left = i > 0 ? gaps[i - 1] : std::numeric_limits<double>::infinity();
    const double right = gaps[i + 1];
    if (gaps[i] <= left && gaps[i] <= right) minima.push_back(i);
    best_coarse = std::min(best_coarse, gaps[i]);
  }
  // a curve decreasing into s -> 1 has its infimum at the last interior point
  if (last >= 2 && gaps[last - 1] <= gaps[last - 2] &&
      std::find(minima.begin(), minima.end(), last - 1) == minima.end())
    minima.push_back(last - 1);
  if (minima.empty()) minima.push_back(last - 1);

  // refine candidates whose coarse gap is within 10% of the best
  GapEvaluator eval{sys, opts, k_solve, {}, false};
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<GapPoint> refined;
  for (std::size_t i : minima) {
    if (gaps[i] > 1.1 * best_coarse) continue;
    double a = i > 0 ? grid[i - 1] : grid[i];
    double b = i + 1 <= last ? grid[i + 1] : grid[i];
    b = std::min(b, 1.0 - 1e-9);  // minimum over [0,1)
    eval.has_warm = false;
    double c = b - golden * (b - a), d = a + golden * (b - a);
    double fc = eval(c), fd = eval(d);
    while (b - a > opts.refine_tol) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - golden * (b - a);
        fc = eval(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + golden * (b - a);
        fd = eval(d);
      }
    }
    const double s_min = 0.5 * (a + b);
    refined.push_back({s_min, eval(s_min)});
  }
  std::sort(refined.begin(), refined.end(),
            [](const GapPoint& x, const GapPoint& y) { return x.gap < y.gap; });
  result.s_star = refined.front().s;
  result.min_gap = refined.front().gap;
  for (const GapPoint& p : refined)
    if (p.gap <= 1.1 * result.min_gap) result.candidates.push_back(p);
  return result;
}

GapFit fit_gap_exponent(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 4) throw std::invalid_argument("fit_gap_exponent: need >= 4 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double m = static_cast<double>(points.size());
  for (const auto& [n, gap] : points) {
    if (!(gap > 0.0)) throw std::invalid_argument("fit_gap_exponent: non-positive gap");
    const double x = n, y = std::log(gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_gap_exponent: degenerate abscissae");
  GapFit fit;
  fit.c = (m * sxy - sx * sy) / denom;
  const double ss_tot = syy - sy * sy / m;
  const double intercept = (sy - fit.c * sx) / m;
  double ss_res = 0.0;
  for (const auto& [n, gap] : points) {
    const double r = std::log(gap) - (intercept + fit.c * n);
    ss_res += r * r;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace qagap
