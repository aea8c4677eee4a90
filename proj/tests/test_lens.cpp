#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qagap/instances.hpp"
#include "qagap/lens.hpp"

using namespace qagap;

namespace {

IsingModel chain5_ising(double w4, double lambda) {
  WeightedGraph g = gen_chain5(w4);
  g.set_uniform_penalty(lambda);
  return mis_to_ising(g);
}

std::set<State> lens_states(const LensSet& ls) {
  std::set<State> out;
  for (const auto& nb : ls.neighbors) out.insert(nb.state);
  return out;
}

std::set<int> lens_levels(const LensSet& ls) {
  std::set<int> out;
  for (const auto& nb : ls.neighbors) out.insert(nb.level);
  return out;
}

}  // namespace

TEST_CASE("single-bit flip neighborhood matches the worked example") {
  const State s = state_from_string("10101");
  auto nbrs = neighbors(s, 5, DriverSpec::x_driver());
  std::set<State> got(nbrs.begin(), nbrs.end());
  std::set<State> want = {state_from_string("00101"), state_from_string("11101"),
                          state_from_string("10001"), state_from_string("10111"),
                          state_from_string("10100")};
  CHECK(got == want);
  CHECK(neighbors(0, 1, DriverSpec::x_driver()) == std::vector<State>{1});
}

TEST_CASE("XX neighborhood adds the driver-edge double flips") {
  WeightedGraph g = gen_chain5(1.51);
  auto nbrs = neighbors(state_from_string("01010"), 5, DriverSpec::xx_driver(-1.0, g.edges()));
  std::set<State> got(nbrs.begin(), nbrs.end());
  CHECK(got.count(state_from_string("10010")) == 1);
  CHECK(got.count(state_from_string("01001")) == 1);
  CHECK(got.size() == 9);  // 5 single flips + 4 edge flips, all distinct here
}

TEST_CASE("neighbor relation is symmetric and nbr_X has size n") {
  std::mt19937_64 rng(31);
  WeightedGraph g = gen_chain5(1.49);
  DriverSpec x = DriverSpec::x_driver();
  DriverSpec xx = DriverSpec::xx_driver(-1.0, g.edges());
  for (int rep = 0; rep < 50; ++rep) {
    const State a = static_cast<State>(rng() % 32);
    auto nx = neighbors(a, 5, x);
    CHECK(nx.size() == 5);
    for (State b : neighbors(a, 5, xx)) {
      auto back = neighbors(b, 5, xx);
      CHECK(std::find(back.begin(), back.end(), a) != back.end());
    }
    // X neighborhood is contained in the XX one
    auto nxx = neighbors(a, 5, xx);
    for (State b : nx) CHECK(std::find(nxx.begin(), nxx.end(), b) != nxx.end());
  }
}

TEST_CASE("chain5(1.49) lens sets reproduce the worked levels") {
  SUBCASE("J=1.52: lens(GS)={|5|}, lens(FS)={|4|}") {
    IsingModel m = chain5_ising(1.49, 1.52);
    LensSet gs = lens_set(0, m, DriverSpec::x_driver());
    LensSet fs = lens_set(1, m, DriverSpec::x_driver());
    CHECK(*lens_levels(gs).begin() == 5);
    CHECK(*lens_levels(fs).begin() == 4);
    // level 4 is the degenerate dependent pair {01011, 11010}
    std::set<State> fs_states = lens_states(fs);
    CHECK(fs_states.count(state_from_string("01011")) == 1);
    CHECK(fs_states.count(state_from_string("11010")) == 1);
    // level 5 holds the three independent pairs neighboring the optimum
    std::set<State> gs_states = lens_states(gs);
    for (const char* b : {"10100", "10001", "00101"})
      CHECK(gs_states.count(state_from_string(b)) == 1);
  }
  SUBCASE("J=4: lens(GS)={|4|}, lens(FS)={|5|,|6|}") {
    IsingModel m = chain5_ising(1.49, 4.0);
    LensSet gs = lens_set(0, m, DriverSpec::x_driver());
    LensSet fs = lens_set(1, m, DriverSpec::x_driver());
    CHECK(*lens_levels(gs).begin() == 4);
    auto fsl = lens_levels(fs);
    CHECK(*fsl.begin() == 5);
    CHECK(fsl.count(6) == 1);
  }
}

TEST_CASE("XX driver pulls the two-flip states into lens(GS) for w4=1.51") {
  WeightedGraph g = gen_chain5(1.51);
  g.set_uniform_penalty(4.0);
  IsingModel m = mis_to_ising(g);
  LensSet gs = lens_set(0, m, DriverSpec::xx_driver(-1.0, g.edges()));
  std::set<State> got = lens_states(gs);
  CHECK(got.count(state_from_string("10010")) == 1);  // level |2|
  CHECK(got.count(state_from_string("01001")) == 1);  // level |3|
  CHECK(gs.neighbors.front().level == 2);
}

TEST_CASE("predictions match the paper's eight chain-5 configurations") {
  struct Case {
    double w4, lambda;
    LensPrediction want;
  };
  const Case cases[] = {
      {1.49, 1.52, LensPrediction::AntiCrossing},
      {1.49, 4.0, LensPrediction::NoAntiCrossing},
      {1.49, 10.0, LensPrediction::NoAntiCrossing},
      {1.49, 100.0, LensPrediction::NoAntiCrossing},
      {1.51, 1.52, LensPrediction::NoAntiCrossing},
      {1.51, 4.0, LensPrediction::AntiCrossing},
      {1.51, 10.0, LensPrediction::AntiCrossing},
      {1.51, 100.0, LensPrediction::AntiCrossing},
  };
  for (const Case& c : cases) {
    CAPTURE(c.w4);
    CAPTURE(c.lambda);
    PredictionReport rep = predict(chain5_ising(c.w4, c.lambda), DriverSpec::x_driver());
    CHECK(rep.prediction == c.want);
  }
}

TEST_CASE("XX-driver predictions for J=4") {
  WeightedGraph g49 = gen_chain5(1.49);
  g49.set_uniform_penalty(4.0);
  WeightedGraph g51 = gen_chain5(1.51);
  g51.set_uniform_penalty(4.0);
  CHECK(predict(mis_to_ising(g51), DriverSpec::xx_driver(-1.0, g51.edges())).prediction ==
        LensPrediction::NoAntiCrossing);
  CHECK(predict(mis_to_ising(g49), DriverSpec::xx_driver(-1.0, g49.edges())).prediction ==
        LensPrediction::AntiCrossing);
}

TEST_CASE("chain7: low levels are independent sets, stable in J") {
  WeightedGraph g = gen_chain7();
  std::vector<std::vector<SpectrumLevel>> spectra;
  for (double lambda : {2.0, 10.0, 100.0, 1000.0}) {
    WeightedGraph gj = g;
    gj.set_uniform_penalty(lambda);
    spectra.push_back(brute_force_ising(mis_to_ising(gj)));
  }
  // the lowest 6 levels hold the same basis states for every J
  for (std::size_t lvl = 0; lvl < 6; ++lvl) {
    auto ref = spectra[0][lvl].states;
    std::sort(ref.begin(), ref.end());
    for (std::size_t j = 1; j < spectra.size(); ++j) {
      auto got = spectra[j][lvl].states;
      std::sort(got.begin(), got.end());
      CAPTURE(lvl);
      CHECK(got == ref);
    }
  }
  // and the lens-based prediction stays an anti-crossing at every J
  for (double lambda : {2.0, 10.0, 100.0, 1000.0}) {
    WeightedGraph gj = g;
    gj.set_uniform_penalty(lambda);
    CHECK(predict(mis_to_ising(gj), DriverSpec::x_driver()).prediction ==
          LensPrediction::AntiCrossing);
  }
}

TEST_CASE("predict refuses non-stoquastic drivers") {
  IsingModel m = chain5_ising(1.49, 1.52);
  CHECK_THROWS(predict(m, DriverSpec::xx_driver(+1.0, gen_chain5(1.49).edges())));
}

TEST_CASE("empty lens set when the cutoff excludes every neighbor") {
  IsingModel m = chain5_ising(1.49, 1.52);
  LensCutoff tight;
  tight.rank_cut = 1;
  LensSet gs = lens_set(0, m, DriverSpec::x_driver(), tight);
  CHECK(gs.neighbors.empty());
}
