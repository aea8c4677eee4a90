#include "qagap/anticross.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qagap {

FinalBasis FinalBasis::from_ising(const IsingModel& m) {
  FinalBasis fb;
  fb.levels = brute_force_ising(m);
  fb.m0 = static_cast<int>(fb.levels.at(0).states.size());
  fb.m1 = fb.levels.size() > 1 ? static_cast<int>(fb.levels[1].states.size()) : 0;
  return fb;
}

int FinalBasis::level_of(State z) const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (State s : levels[k].states)
      if (s == z) return static_cast<int>(k);
  return -1;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::None: return "none";
    case Verdict::Strong: return "strong";
    case Verdict::Weak: return "weak";
  }
  return "none";
}

OverlapTraces overlaps(const SpectralSweep& sweep, const FinalBasis& final_basis, int K) {
  if (sweep.k < 2) throw std::invalid_argument("overlaps: sweep must track >= 2 levels");
  if (K < 2 || K > static_cast<int>(final_basis.levels.size()))
    throw std::invalid_argument("overlaps: K exceeds computed final levels");
  OverlapTraces out;
  out.grid = sweep.grid;
  out.levels_tracked = K;
  out.a = Matrix::Zero(K, sweep.grid.size());
  out.b = Matrix::Zero(K, sweep.grid.size());
  for (std::size_t g = 0; g < sweep.grid.size(); ++g) {
    const Matrix& vecs = sweep.solutions[g].vectors;
    for (int k = 0; k < K; ++k) {
      double pa = 0.0, pb = 0.0;
      for (State z : final_basis.levels[k].states) {
        pa += vecs(z, 0) * vecs(z, 0);
        pb += vecs(z, 1) * vecs(z, 1);
      }
      out.a(k, g) = pa;
      out.b(k, g) = pb;
    }
  }
  return out;
}

namespace {

struct TraceView {
  const OverlapTraces& t;
  double a0(std::size_t i) const { return t.a(0, i); }
  double a1(std::size_t i) const { return t.a(1, i); }
  double b0(std::size_t i) const { return t.b(0, i); }
  double b1(std::size_t i) const { return t.b(1, i); }
};

std::array<double, 4> interpolate_traces(const OverlapTraces& t, double s) {
  const auto& grid = t.grid;
  auto it = std::lower_bound(grid.begin(), grid.end(), s);
  std::size_t hi = std::min<std::size_t>(std::distance(grid.begin(), it), grid.size() - 1);
  std::size_t lo = hi > 0 ? hi - 1 : 0;
  const double w = grid[hi] > grid[lo] ? (s - grid[lo]) / (grid[hi] - grid[lo]) : 0.0;
  auto lerp = [&](const Matrix& m, int k) { return (1 - w) * m(k, lo) + w * m(k, hi); };
  return {lerp(t.a, 0), lerp(t.a, 1), lerp(t.b, 0), lerp(t.b, 1)};
}

// Bisect for the zero of value(pick0) - value(pick1) between s_lo and s_hi.
double refine_crossing(const std::function<std::array<double, 4>(double)>& resolve, double s_lo,
                       double s_hi, int pick0, int pick1, std::array<double, 4>& at_cross) {
  auto diff = [&](double s) {
    at_cross = resolve(s);
    return at_cross[pick0] - at_cross[pick1];
  };
  double f_lo = diff(s_lo);
  double f_hi = diff(s_hi);
  if (f_lo == 0.0) {
    diff(s_lo);
    return s_lo;
  }
  if ((f_lo < 0) == (f_hi < 0)) {
    diff(0.5 * (s_lo + s_hi));
    return 0.5 * (s_lo + s_hi);
  }
  for (int iter = 0; iter < 80 && s_hi - s_lo > 1e-13; ++iter) {
    const double mid = 0.5 * (s_lo + s_hi);
    const double f_mid = diff(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      s_lo = mid;
      f_lo = f_mid;
    } else {
      s_hi = mid;
    }
  }
  const double s_mid = 0.5 * (s_lo + s_hi);
  diff(s_mid);
  return s_mid;
}

}  // namespace

AntiCrossingReport detect(const OverlapTraces& traces, const MinGapResult& gap_info,
                          const DetectOptions& opts) {
  const auto& grid = traces.grid;
  const std::size_t npts = grid.size();
  if (npts < 5) throw std::invalid_argument("detect: grid too small");
  const double step = grid[1] - grid[0];

  AntiCrossingReport rep;
  rep.s_star = gap_info.s_star;
  rep.min_gap = gap_info.min_gap;
  rep.gamma = opts.gamma;
  rep.gamma_prime = opts.gamma_prime;

  if (gap_info.s_star < grid[1] || gap_info.s_star > grid[npts - 2]) {
    rep.notes = "min gap within one grid step of the boundary; no window can be formed";
    return rep;
  }

  std::function<std::array<double, 4>(double)> resolve = opts.resolver;
  if (!resolve) resolve = [&traces](double s) { return interpolate_traces(traces, s); };
  TraceView tv{traces};

  // candidate a0/a1 swap brackets, nearest to the min gap first
  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i + 1 < npts; ++i) {
    const double d0 = tv.a0(i) - tv.a1(i);
    const double d1 = tv.a0(i + 1) - tv.a1(i + 1);
    if ((d0 <= 0 && d1 > 0) || (d0 >= 0 && d1 < 0)) brackets.push_back(i);
  }
  std::sort(brackets.begin(), brackets.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(grid[x] - gap_info.s_star) < std::abs(grid[y] - gap_info.s_star);
  });

  const double floor = (1.0 - opts.gamma_prime) / 2.0;
  double s_ac = -1.0;
  std::array<double, 4> at_ac{};
  double eps_seen = 0.0;
  for (std::size_t i : brackets) {
    std::array<double, 4> vals{};
    const double s = refine_crossing(resolve, grid[i], grid[i + 1], 0, 1, vals);
    if (vals[0] < floor || vals[1] < floor) continue;  // crossing of depleted traces
    // the matching b0/b1 swap must exist nearby
    const double search = std::max(0.05, 10 * step);
    double s_bc = -1.0;
    std::array<double, 4> bvals{};
    for (std::size_t j = 0; j + 1 < npts; ++j) {
      if (std::abs(grid[j] - s) > search) continue;
      const double d0 = tv.b0(j) - tv.b1(j);
      const double d1 = tv.b0(j + 1) - tv.b1(j + 1);
      if ((d0 >= 0 && d1 < 0) || (d0 <= 0 && d1 > 0)) {
        const double cand = refine_crossing(resolve, grid[j], grid[j + 1], 2, 3, bvals);
        if (bvals[2] >= floor && bvals[3] >= floor &&
            (s_bc < 0 || std::abs(cand - s) < std::abs(s_bc - s)))
          s_bc = cand;
      }
    }
    if (s_bc < 0) continue;
    const double asym_a = 0.5 * std::abs(vals[0] - vals[1]);
    std::array<double, 4> at_bc = resolve(s_bc);
    const double asym_b = 0.5 * std::abs(at_bc[2] - at_bc[3]);
    if (asym_a > opts.epsilon || asym_b > opts.epsilon) continue;
    s_ac = s;
    at_ac = vals;
    eps_seen = std::max(asym_a, asym_b);
    break;
  }

  if (s_ac < 0) {
    rep.notes = "no balanced 50/50 swap point of the a and b traces near the min gap";
    return rep;
  }

  rep.s_cross = s_ac;
  rep.epsilon = eps_seen;
  rep.at = {s_ac, at_ac[0], at_ac[1], at_ac[2], at_ac[3]};

  const std::size_t ic = static_cast<std::size_t>(
      std::clamp<long>(std::lround(s_ac / step), 1, static_cast<long>(npts) - 2));
  const std::size_t d_limit = std::min(ic, npts - 1 - ic);
  const double g = opts.gamma;
  const double gp = opts.gamma_prime;

  auto sums_ok = [&](std::size_t lo, std::size_t hi, double bound) {
    for (std::size_t i = lo; i <= hi; ++i)
      if (tv.a0(i) + tv.a1(i) < 1.0 - bound || tv.b0(i) + tv.b1(i) < 1.0 - bound) return false;
    return true;
  };
  auto full_swing = [&](std::size_t lo, std::size_t hi) {
    return tv.a0(lo) <= g && tv.a0(hi) >= 1 - g && tv.a1(lo) >= 1 - g && tv.a1(hi) <= g &&
           tv.b0(lo) >= 1 - g && tv.b0(hi) <= g && tv.b1(lo) <= g && tv.b1(hi) >= 1 - g;
  };

  // strong: smallest window certifying the full swing, with the min gap inside
  for (std::size_t d = 2; d < d_limit; ++d) {
    const std::size_t lo = ic - d, hi = ic + d;
    if (!sums_ok(lo, hi, g)) break;  // widening only worsens the window minimum
    if (!full_swing(lo, hi)) continue;
    if (std::abs(s_ac - gap_info.s_star) > d * step) continue;
    rep.verdict = Verdict::Strong;
    rep.delta = d * step;
    rep.below = {grid[lo], tv.a0(lo), tv.a1(lo), tv.b0(lo), tv.b1(lo)};
    rep.above = {grid[hi], tv.a0(hi), tv.a1(hi), tv.b0(hi), tv.b1(hi)};
    std::size_t dmax = d;
    while (dmax + 1 < d_limit && sums_ok(ic - dmax - 1, ic + dmax + 1, g) &&
           full_swing(ic - dmax - 1, ic + dmax + 1))
      ++dmax;
    rep.delta_max = dmax * step;
    return rep;
  }

  // weak: right half strict, left half relaxed to gamma'
  for (std::size_t d = 2; d < d_limit; ++d) {
    const std::size_t lo = ic - d, hi = ic + d;
    if (!sums_ok(ic, hi, g) || !sums_ok(lo, ic, gp)) break;
    const bool right =
        tv.a0(hi) >= 1 - g && tv.a1(hi) <= g && tv.b0(hi) <= g && tv.b1(hi) >= 1 - g;
    const bool left =
        tv.a0(lo) <= gp && tv.a1(lo) >= 1 - gp && tv.b0(lo) >= 1 - gp && tv.b1(lo) <= gp;
    if (!(right && left)) continue;
    rep.verdict = Verdict::Weak;
    rep.delta = d * step;
    rep.delta_max = d * step;
    rep.below = {grid[lo], tv.a0(lo), tv.a1(lo), tv.b0(lo), tv.b1(lo)};
    rep.above = {grid[hi], tv.a0(hi), tv.a1(hi), tv.b0(hi), tv.b1(hi)};
    rep.notes = "pre-crossing overlaps satisfy only the relaxed gamma' bound";
    return rep;
  }

  rep.notes = "balanced swap point found but no certifying window";
  return rep;
}

HyperbolaFit hyperbola_fit(const SpectralSweep& sweep, double s_star, int window) {
  if (window < 7) throw std::invalid_argument("hyperbola_fit: window must span >= 7 grid points");
  const auto& grid = sweep.grid;
  auto nearest = std::min_element(grid.begin(), grid.end(), [&](double x, double y) {
    return std::abs(x - s_star) < std::abs(y - s_star);
  });
  const long ic = std::distance(grid.begin(), nearest);
  const long half = window / 2;
  const long lo = std::max<long>(0, ic - half);
  const long hi = std::min<long>(grid.size() - 1, ic + half);
  if (hi - lo + 1 < 7) throw std::invalid_argument("hyperbola_fit: window clipped below 7 points");

  // mean branch: (E0+E1)/2 = Ec + B (s - s*)  -- plain linear regression
  // difference branch: (E1-E0)^2 = Dmin^2 + A^2 (s - s*)^2
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  double qx = 0, qy = 0, qxx = 0, qxy = 0;
  for (long i = lo; i <= hi; ++i) {
    const double x = grid[i] - s_star;
    const auto& vals = sweep.solutions[i].values;
    const double mean = 0.5 * (vals[0] + vals[1]);
    const double diff2 = (vals[1] - vals[0]) * (vals[1] - vals[0]);
    m += 1;
    sx += x;
    sy += mean;
    sxx += x * x;
    sxy += x * mean;
    qx += x * x;
    qy += diff2;
    qxx += x * x * x * x;
    qxy += x * x * diff2;
  }
  HyperbolaFit fit;
  fit.slope_mean = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double ec = (sy - fit.slope_mean * sx) / m;
  const double denom = m * qxx - qx * qx;
  const double a2 = (m * qxy - qx * qy) / denom;
  const double d2 = (qy - a2 * qx) / m;
  fit.slope_diff = std::sqrt(std::max(a2, 0.0));
  fit.delta_min = std::sqrt(std::max(d2, 0.0));
  // conditioning of the 2x2 normal matrix [[m, qx], [qx, qxx]]
  const double tr = m + qxx;
  const double det = denom;
  const double disc = std::sqrt(std::max(tr * tr - 4 * det, 0.0));
  const double lam_max = 0.5 * (tr + disc), lam_min = 0.5 * (tr - disc);
  fit.condition = lam_min > 0 ? lam_max / lam_min : std::numeric_limits<double>::infinity();

  double rss = 0.0;
  for (long i = lo; i <= hi; ++i) {
    const double x = grid[i] - s_star;
    const auto& vals = sweep.solutions[i].values;
    const double root =
        0.5 * std::sqrt(fit.delta_min * fit.delta_min + fit.slope_diff * fit.slope_diff * x * x);
    const double e_minus = ec + fit.slope_mean * x - root;
    const double e_plus = ec + fit.slope_mean * x + root;
    rss += (vals[0] - e_minus) * (vals[0] - e_minus) + (vals[1] - e_plus) * (vals[1] - e_plus);
  }
  fit.rms_residual = std::sqrt(rss / (2 * m));
  return fit;
}

std::vector<std::pair<double, double>> hamming_weight_signal(const OverlapTraces& traces,
                                                             const FinalBasis& final_basis) {
  int dmin = std::numeric_limits<int>::max();
  for (State u : final_basis.levels.at(1).states)
    for (State v : final_basis.levels.at(0).states)
      dmin = std::min(dmin, hamming_distance(u, v));
  std::vector<std::pair<double, double>> signal;
  signal.reserve(traces.grid.size());
  for (std::size_t i = 0; i < traces.grid.size(); ++i)
    signal.emplace_back(traces.grid[i], traces.a(1, i) * dmin);
  return signal;
}

}  // namespace qagap
