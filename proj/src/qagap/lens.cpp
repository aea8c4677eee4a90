#include "qagap/lens.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qagap {

std::vector<State> neighbors(State state, int n, const DriverSpec& driver) {
  std::vector<State> out;
  out.reserve(n + driver.edges.size());
  for (int i = 0; i < n; ++i) out.push_back(state ^ (State{1} << i));
  if (driver.kind == DriverSpec::Kind::XX)
    for (const auto& [u, v] : driver.edges)
      out.push_back(state ^ (State{1} << u) ^ (State{1} << v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LensSet lens_set(int anchor_level, const IsingModel& ising, const DriverSpec& driver,
                 const LensCutoff& cutoff) {
  if (anchor_level != 0 && anchor_level != 1)
    throw std::invalid_argument("lens anchor must be level 0 (GS) or 1 (FS)");
  const std::vector<SpectrumLevel> spectrum = brute_force_ising(ising);
  std::vector<int> level_of(ising.dimension(), -1);
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    for (State z : spectrum[k].states) level_of[z] = static_cast<int>(k);

  LensSet out;
  out.n = ising.num_qubits();
  out.anchor_level = anchor_level;
  out.anchor_states = spectrum.at(anchor_level).states;
  out.cutoff = cutoff;

  std::set<State> seen;
  for (State anchor : out.anchor_states)
    for (State nb : neighbors(anchor, ising.num_qubits(), driver)) {
      if (level_of[nb] == anchor_level) continue;  // inside the anchor subspace
      if (!seen.insert(nb).second) continue;
      const int lvl = level_of[nb];
      const double e = spectrum[lvl].energy;
      bool keep;
      if (cutoff.energy_window)
        keep = e <= spectrum.at(1).energy + *cutoff.energy_window;
      else
        keep = lvl <= cutoff.rank_cut;
      if (keep) out.neighbors.push_back({nb, e, lvl});
    }
  std::sort(out.neighbors.begin(), out.neighbors.end(), [](const LensNeighbor& x, const LensNeighbor& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    return x.state < y.state;
  });
  return out;
}

std::string to_string(LensPrediction p) {
  switch (p) {
    case LensPrediction::NoAntiCrossing: return "no-anticrossing";
    case LensPrediction::AntiCrossing: return "anticrossing";
    case LensPrediction::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

PredictionReport predict(const IsingModel& ising, const DriverSpec& driver,
                         const LensCutoff& cutoff) {
  if (!driver.stoquastic())
    throw std::invalid_argument(
        "lens prediction assumes the uniform superposition initial ground state; "
        "the supplied driver is not stoquastic");
  PredictionReport rep;
  rep.gs = lens_set(0, ising, driver, cutoff);
  rep.fs = lens_set(1, ising, driver, cutoff);

  const int gs_low = rep.gs.neighbors.empty() ? std::numeric_limits<int>::max()
                                              : rep.gs.neighbors.front().level;
  const int fs_low = rep.fs.neighbors.empty() ? std::numeric_limits<int>::max()
                                              : rep.fs.neighbors.front().level;
  const std::size_t gs_count = rep.gs.neighbors.size();
  const std::size_t fs_count = rep.fs.neighbors.size();

  std::ostringstream why;
  why << "lens(GS): lowest level " << gs_low << ", " << gs_count << " within cutoff; "
      << "lens(FS): lowest level " << fs_low << ", " << fs_count << " within cutoff. ";
  if (gs_low < fs_low) {
    rep.prediction = LensPrediction::NoAntiCrossing;
    why << "GS has more LENS (lower-level neighbor).";
  } else if (fs_low < gs_low) {
    rep.prediction = LensPrediction::AntiCrossing;
    why << "FS has more LENS (lower-level neighbor).";
  } else if (gs_count > fs_count) {
    rep.prediction = LensPrediction::NoAntiCrossing;
    why << "Equal lowest level; GS has more neighbors within the cutoff.";
  } else if (fs_count > gs_count) {
    rep.prediction = LensPrediction::AntiCrossing;
    why << "Equal lowest level; FS has more neighbors within the cutoff.";
  } else {
    rep.prediction = LensPrediction::Inconclusive;
    why << "Equal on both the lowest level and the count.";
  }
  rep.rationale = why.str();
  return rep;
}

}  // namespace qagap
