#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qagap/anticross.hpp"
#include "qagap/system_hamiltonian.hpp"

namespace qagap {

/// Driver-reachable basis states: single-bit flips for the X driver, plus
/// two-bit flips on the driver edges for XX (one state per driver term).
std::vector<State> neighbors(State state, int n, const DriverSpec& driver);

/// Low-energy cutoff rule. Default: keep neighbors whose problem level index
/// is <= rank_cut. The alternative keeps energies within `window` above E_1.
struct LensCutoff {
  int rank_cut = 8;
  std::optional<double> energy_window;
};

struct LensNeighbor {
  State state = 0;
  double energy = 0.0;
  int level = 0;
};

struct LensSet {
  int n = 0;
  int anchor_level = 0;                // 0 = GS, 1 = FS
  std::vector<State> anchor_states;    // the degenerate subspace
  std::vector<LensNeighbor> neighbors; // sorted by energy, cutoff applied
  LensCutoff cutoff;
};

/// Union of driver neighborhoods over the anchor's degenerate states,
/// annotated with level indices from the exhaustive spectrum and filtered by
/// the cutoff. States inside the anchor's own level are not neighbors.
LensSet lens_set(int anchor_level, const IsingModel& ising, const DriverSpec& driver,
                 const LensCutoff& cutoff = {});

enum class LensPrediction { NoAntiCrossing, AntiCrossing, Inconclusive };
std::string to_string(LensPrediction p);

struct PredictionReport {
  LensPrediction prediction = LensPrediction::Inconclusive;
  LensSet gs;
  LensSet fs;
  std::string rationale;
};

/// Dominance rule: the anchor whose lowest-level neighbor strictly outranks
/// the other "has more LENS"; ties break on the neighbor count within the
/// cutoff. More LENS on GS predicts no anti-crossing; on FS, an anti-crossing.
/// Requires a stoquastic driver (uniform initial ground state).
PredictionReport predict(const IsingModel& ising, const DriverSpec& driver,
                         const LensCutoff& cutoff = {});

}  // namespace qagap
