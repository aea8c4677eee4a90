#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qagap/instances.hpp"

using namespace qagap;

namespace {

// independent uniform-random graph + penalties for property checks
WeightedGraph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> wdist(0.5, 3.0);
  std::bernoulli_distribution edge(0.5);
  std::vector<double> w(n);
  for (double& x : w) x = wdist(rng);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) edges.push_back({i, j});
  return WeightedGraph(n, std::move(w), std::move(edges));
}

double set_weight(const WeightedGraph& g, const std::vector<int>& set) {
  double w = 0;
  for (int v : set) w += g.weight(v);
  return w;
}

// QUBO objective from the MIS statement, evaluated directly
double mis_objective(const WeightedGraph& g, State x) {
  double y = 0;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (bit_of(x, i)) y += g.weight(i);
  for (const auto& [u, v] : g.edges())
    if (bit_of(x, u) && bit_of(x, v)) y -= g.penalty(u, v);
  return y;
}

}  // namespace

TEST_CASE("chain5 instances reproduce the caption optima") {
  {
    WeightedGraph g = gen_chain5(1.49);
    MisResult r = brute_force_mis(g);
    CHECK(r.best_weight == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(r.best_sets.size() == 1);
    CHECK(r.best_sets[0] == std::vector<int>{0, 2, 4});
  }
  {
    WeightedGraph g = gen_chain5(1.51);
    MisResult r = brute_force_mis(g);
    CHECK(r.best_weight == doctest::Approx(3.01).epsilon(1e-12));
    REQUIRE(r.best_sets.size() == 1);
    CHECK(r.best_sets[0] == std::vector<int>{1, 3});
  }
  CHECK_THROWS(gen_chain5(-1.0));
  CHECK_THROWS(gen_chain5(0.0));
}

TEST_CASE("chain7: optimum and the 4-fold local maxima") {
  WeightedGraph g = gen_chain7();
  MisResult r = brute_force_mis(g);
  CHECK(r.best_weight == doctest::Approx(4.0).epsilon(1e-12));
  REQUIRE(r.best_sets.size() == 1);
  CHECK(r.best_sets[0] == std::vector<int>{0, 2, 4, 6});
  // the four degenerate runners-up at weight 3.99 = 1 + 1.99 + 1
  std::vector<std::vector<int>> expected = {{0, 3, 5}, {1, 3, 5}, {0, 3, 6}, {1, 3, 6}};
  for (const auto& s : expected) CHECK(set_weight(g, s) == doctest::Approx(3.99).epsilon(1e-12));
}

TEST_CASE("empty graph: every vertex is in the optimum") {
  WeightedGraph g(3, {1, 1, 1}, {});
  MisResult r = brute_force_mis(g);
  CHECK(r.best_weight == doctest::Approx(3.0));
  REQUIRE(r.best_sets.size() == 1);
  CHECK(r.best_sets[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("loop gadget matches the n=4 Hamiltonian term by term") {
  IsingModel m = gen_loop_gadget(4, 4.0);
  CHECK(m.fields() == std::vector<double>{3.0, 0.0, 0.0, -4.0});
  const std::map<Edge, double> expected = {
      {{0, 1}, -4.0}, {{0, 2}, -4.0}, {{1, 3}, -2.0}, {{2, 3}, -2.0}};
  CHECK(m.couplings() == expected);
  CHECK_THROWS(gen_loop_gadget(4, 3.0));
  CHECK_THROWS(gen_loop_gadget(5, 4.0));
  CHECK_THROWS(gen_loop_gadget(2, 4.0));
}

TEST_CASE("loop gadget: unique ground state, 2-fold first excited manifold") {
  // the paper writes these kets with the opposite bit convention; under
  // bit 1 <-> spin +1 the unique ground state is all ones
  for (int n : {4, 6, 8}) {
    for (double R : {4.0, 8.0}) {
      IsingModel m = gen_loop_gadget(n, R);
      auto levels = brute_force_ising(m);
      CAPTURE(n);
      CAPTURE(R);
      REQUIRE(levels.size() >= 2);
      CHECK(levels[0].states.size() == 1);
      CHECK(levels[0].states[0] == (State{1} << n) - 1);
      CHECK(levels[1].states.size() == 2);
      // flipping the -R end vertex is free at the excited level
      std::vector<State> fs = levels[1].states;
      std::sort(fs.begin(), fs.end());
      CHECK(fs[0] == 0u);
      CHECK(fs[1] == (State{1} << (n - 1)));
      CHECK(levels[1].energy - levels[0].energy == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("mis_to_ising: fields, couplings, and the -4Y identity") {
  SUBCASE("isolated vertex is always in the optimum") {
    WeightedGraph g(1, {1.0}, {});
    IsingModel m = mis_to_ising(g);
    CHECK(m.fields()[0] == doctest::Approx(-2.0));
    CHECK(m.energy(1) < m.energy(0));  // spin +1 (in the set) is the argmin
  }
  SUBCASE("chain5(1.49) at lambda 1.52: ground state 10101") {
    WeightedGraph g = gen_chain5(1.49);
    g.set_uniform_penalty(1.52);
    auto levels = brute_force_ising(mis_to_ising(g));
    CHECK(levels[0].states == std::vector<State>{state_from_string("10101")});
    CHECK(levels[1].states == std::vector<State>{state_from_string("01010")});
  }
  SUBCASE("chain5(1.51) at lambda 4: ground 01010, first excited 10101") {
    WeightedGraph g = gen_chain5(1.51);
    g.set_uniform_penalty(4.0);
    auto levels = brute_force_ising(mis_to_ising(g));
    CHECK(levels[0].states == std::vector<State>{state_from_string("01010")});
    CHECK(levels[1].states == std::vector<State>{state_from_string("10101")});
  }
  SUBCASE("missing or weak penalties are rejected") {
    WeightedGraph g = gen_chain5(1.49);
    CHECK_THROWS_AS(mis_to_ising(g), std::logic_error);
    g.set_uniform_penalty(1.0);  // min weight is 1.0: weak inequality only
    CHECK_THROWS_AS(mis_to_ising(g), std::invalid_argument);
  }
}

TEST_CASE("theorem check: decoded optimum and pointwise -4Y relation on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10
    WeightedGraph g = with_default_penalties(random_graph(rng, n));
    IsingModel m = mis_to_ising(g);
    MisResult mis = brute_force_mis(g);

    // energy(z) = -4 Y(x) pointwise over all assignments
    for (State x = 0; x < (State{1} << n); ++x)
      CHECK(m.energy(x) == doctest::Approx(-4.0 * mis_objective(g, x)).epsilon(1e-9));

    // decoded ground state is a maximizing independent set
    auto levels = brute_force_ising(m);
    REQUIRE(levels[0].states.size() == mis.best_sets.size());
    for (State z : levels[0].states) {
      std::vector<int> decoded;
      for (int i = 0; i < n; ++i)
        if (bit_of(z, i)) decoded.push_back(i);
      CHECK(std::find(mis.best_sets.begin(), mis.best_sets.end(), decoded) != mis.best_sets.end());
    }
  }
}

TEST_CASE("brute_force_ising groups degenerate energies and sorts ascending") {
  SUBCASE("free spin") {
    IsingModel m(1, {0.0}, {});
    auto levels = brute_force_ising(m);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].energy == 0.0);
    CHECK(levels[0].states.size() == 2);
  }
  SUBCASE("energy evaluation is exact under edge-order permutation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int n = 6;
    std::map<Edge, double> J;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) J[{i, j}] = dist(rng);
    std::vector<double> h(n);
    for (double& x : h) x = dist(rng);
    IsingModel m(n, h, J);
    // reversed-order accumulation via a second model with the same terms
    std::map<Edge, double> J2(J.rbegin(), J.rend());
    IsingModel m2(n, h, J2);
    for (State z = 0; z < (State{1} << n); ++z)
      CHECK(std::abs(m.energy(z) - m2.energy(z)) <= 1e-12);
  }
  SUBCASE("n cap") {
    CHECK_THROWS(brute_force_ising(IsingModel(25, std::vector<double>(25, 0.0), {})));
  }
}
