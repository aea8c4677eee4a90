#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qagap/instances.hpp"
#include "qagap/sweep.hpp"

namespace qagap {

/// Eigenstructure of the problem (final) Hamiltonian: ascending distinct
/// energies with their degenerate basis-state subspaces.
struct FinalBasis {
  std::vector<SpectrumLevel> levels;
  int m0 = 0;  // ground degeneracy
  int m1 = 0;  // first-excited degeneracy

  static FinalBasis from_ising(const IsingModel& m);
  int level_of(State z) const;  // -1 when not found
};

/// a_k(s) = ||P_k |E_0(s)>||^2 and b_k(s) likewise with |E_1(s)>, where P_k
/// projects onto the level-k degenerate subspace of the final Hamiltonian.
/// Basis independent; equals the squared overlap with the matched
/// superposition representative.
struct OverlapTraces {
  std::vector<double> grid;
  Matrix a;  // K x grid
  Matrix b;  // K x grid
  int levels_tracked = 0;
};

OverlapTraces overlaps(const SpectralSweep& sweep, const FinalBasis& final_basis, int K);

enum class Verdict { None, Strong, Weak };
std::string to_string(Verdict v);

struct WitnessPoint {
  double s = 0.0;
  double a0 = 0.0, a1 = 0.0, b0 = 0.0, b1 = 0.0;
};

struct AntiCrossingReport {
  Verdict verdict = Verdict::None;
  double s_star = 0.0;    // min-gap position
  double min_gap = 0.0;
  double s_cross = 0.0;   // certified 50/50 swap point (differs from s_star for weak)
  double delta = 0.0;     // smallest certifying half-width
  double delta_max = 0.0; // widest half-width still satisfying the window condition
  double gamma = 0.0;
  double epsilon = 0.0;          // residual pair asymmetry at the certified swap points
  double gamma_prime = 0.0;      // used by the weak verdict only
  WitnessPoint below, at, above;  // a/b values at s*-delta, swap point, s*+delta
  int m0 = 0, m1 = 0;
  std::string notes;
};

struct DetectOptions {
  double gamma = 0.15;
  double epsilon = 1e-3;
  double gamma_prime = 0.5;
  /// Exact (a0, a1, b0, b1) at arbitrary s, used to refine the swap points
  /// beyond grid resolution. When absent the detector interpolates the traces.
  std::function<std::array<double, 4>(double)> resolver;
};

/// The (gamma, epsilon)-anti-crossing detector over precomputed traces.
/// Certifies: (1) a_0+a_1 and b_0+b_1 >= 1-gamma throughout a window around
/// the swap point, (2) a 50/50 swap point where a_0 = a_1 and b_0 = b_1 within
/// epsilon, with all four overlaps above the (1-gamma')/2 floor, and
/// (3) the full gamma -> 1-gamma swing of all four traces across the window.
/// Weak verdict: (2) holds and the right half satisfies gamma while the left
/// half only satisfies gamma' > gamma.
AntiCrossingReport detect(const OverlapTraces& traces, const MinGapResult& gap_info,
                          const DetectOptions& opts = {});

struct HyperbolaFit {
  double delta_min = 0.0;  // fitted gap at the vertex
  double slope_diff = 0.0; // A, difference of asymptote slopes
  double slope_mean = 0.0; // B, mean of asymptote slopes
  double rms_residual = 0.0;
  double condition = 0.0;  // conditioning of the squared-difference regression
};

/// Least-squares fit of E+-(s) = E(s*) + B(s-s*) +- 1/2 sqrt(Dmin^2 + A^2 (s-s*)^2)
/// to the two tracked levels over a window of >= 7 grid points centered on s*.
HyperbolaFit hyperbola_fit(const SpectralSweep& sweep, double s_star, int window);

/// a_1(s) * d(FS, GS) with d the minimum Hamming distance between level-1 and
/// level-0 basis states; the expectation of the Hamming weight operator drops
/// sharply across an anti-crossing.
std::vector<std::pair<double, double>> hamming_weight_signal(const OverlapTraces& traces,
                                                             const FinalBasis& final_basis);

}  // namespace qagap
