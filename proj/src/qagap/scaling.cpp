#include "qagap/scaling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qagap {

double t_of_s(double alpha, double s) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("s out of [0,1]");
  if (s == 1.0) return 1.0;
  return s / (alpha * (1.0 - s) + s);
}

double s_of_t(double alpha, double t) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("t out of [0,1]");
  if (t == 1.0) return 1.0;
  return t * alpha / (1.0 + (alpha - 1.0) * t);
}

ScalingCheck eigen_scaling_check(const SystemHamiltonian& sys, double alpha, double t, int k,
                                 const SolverOptions& opts) {
  if (t < 0.0 || t >= 1.0) throw std::invalid_argument("t out of [0,1)");
  const SystemHamiltonian scaled = sys.with_alpha(sys.alpha() * alpha);
  const double s = s_of_t(alpha, t);
  const EigenSolution at_t = lowest_eigenpairs(scaled, t, k, opts);
  const EigenSolution at_s = lowest_eigenpairs(sys, s, k, opts);
  const double factor = 1.0 + (alpha - 1.0) * t;
  ScalingCheck out;
  for (int i = 0; i < k; ++i) {
    out.max_energy_residual = std::max(
        out.max_energy_residual, std::abs(at_t.values[i] - factor * at_s.values[i]));
    out.max_vector_misalignment =
        std::max(out.max_vector_misalignment,
                 1.0 - std::abs(at_t.vectors.col(i).dot(at_s.vectors.col(i))));
  }
  return out;
}

namespace {

// second finite difference of gap(s) at the refined minimum
double gap_curvature(const SystemHamiltonian& sys, double s_star, const MinGapOptions& opts) {
  const double h = std::max(1e-4, 10 * opts.refine_tol);
  const int k_solve = std::min<int>(4, static_cast<int>(sys.dimension()));
  auto gap_at = [&](double s) {
    s = std::clamp(s, 0.0, 1.0 - 1e-9);
    return gap_from_values(lowest_eigenpairs(sys, s, k_solve, opts.solver).values);
  };
  const double g0 = gap_at(s_star - h), g1 = gap_at(s_star), g2 = gap_at(s_star + h);
  return (g0 - 2 * g1 + g2) / (h * h);
}

}  // namespace

ScalingReport min_gap_scale_report(const SystemHamiltonian& sys, double alpha,
                                   const ScalingOptions& opts) {
  if (!(alpha > 1.0)) throw std::invalid_argument("min_gap_scale_report requires alpha > 1");
  ScalingReport rep;
  rep.alpha = alpha;

  const SystemHamiltonian scaled = sys.with_alpha(sys.alpha() * alpha);
  const MinGapResult base = locate_min_gap(sys, opts.min_gap);
  const MinGapResult lift = locate_min_gap(scaled, opts.min_gap);
  rep.s_star = base.s_star;
  rep.gap1 = base.min_gap;
  rep.t_star = lift.s_star;
  rep.gap_alpha = lift.min_gap;
  rep.t_of_s_star = t_of_s(alpha, rep.s_star);
  rep.factor = rep.gap_alpha / rep.gap1;
  rep.predicted_factor = 1.0 + (alpha - 1.0) * rep.t_of_s_star;

  const double slack = 1e-6 + 10 * opts.min_gap.refine_tol;
  rep.ordering_holds = rep.t_star <= rep.t_of_s_star + slack && rep.t_of_s_star < rep.s_star;
  const double lower = 1.0 + (alpha - 1.0) * rep.t_star;
  rep.sandwich_holds = rep.factor >= lower * (1.0 - 1e-6) - slack &&
                       rep.factor <= rep.predicted_factor * (1.0 + 1e-6) + slack;

  const double curv = gap_curvature(sys, rep.s_star, opts.min_gap);
  rep.sharp_curvature = curv > opts.curvature_threshold;
  rep.factor_matches_prediction =
      std::abs(rep.factor - rep.predicted_factor) <= opts.factor_rel_tol * rep.predicted_factor;

  std::ostringstream notes;
  if (!rep.ordering_holds || !rep.sandwich_holds) {
    notes << "scaling-law violation: ordering=" << rep.ordering_holds
          << " sandwich=" << rep.sandwich_holds << " (exact law; indicates numerical trouble)";
  } else if (rep.sharp_curvature && !rep.factor_matches_prediction) {
    notes << "sharp minimum but factor " << rep.factor << " misses prediction "
          << rep.predicted_factor;
  } else {
    notes << "ok";
  }
  rep.notes = notes.str();
  return rep;
}

}  // namespace qagap
