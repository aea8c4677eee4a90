#include <doctest.h>

#include <cmath>
#include <random>

#include "qagap/instances.hpp"
#include "qagap/sweep.hpp"

using namespace qagap;

namespace {

IsingModel chain5_ising(double w4, double lambda) {
  WeightedGraph g = gen_chain5(w4);
  g.set_uniform_penalty(lambda);
  return mis_to_ising(g);
}

IsingModel random_ising(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  std::vector<double> h(n);
  for (double& x : h) x = dist(rng);
  std::map<Edge, double> J;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) J[{i, j}] = dist(rng);
  return IsingModel(n, std::move(h), std::move(J));
}

}  // namespace

TEST_CASE("transverse-field spectrum at s=0: values -(n-2m), gap 2") {
  IsingModel m(5, std::vector<double>(5, 0.0), {});
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  EigenSolution sol = lowest_eigenpairs(sys, 0.0, 2);
  CHECK(sol.values[0] == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(sol.values[1] == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("s=1 ground value equals the exhaustive level-0 energy") {
  IsingModel m = chain5_ising(1.49, 1.52);
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  EigenSolution sol = lowest_eigenpairs(sys, 1.0, 3);
  CHECK(sol.values[0] == doctest::Approx(brute_force_ising(m)[0].energy).epsilon(1e-12));
}

TEST_CASE("eigenpair invariants: residuals, orthonormality, ascending order") {
  std::mt19937_64 rng(5);
  IsingModel m = random_ising(rng, 7);
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  for (double s : {0.0, 0.3, 0.7, 1.0}) {
    EigenSolution sol = lowest_eigenpairs(sys, s, 4);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(sol.residuals[i] <= 1e-9 * sys.norm_bound(s));
    Matrix gram = sol.vectors.transpose() * sol.vectors;
    CHECK((gram - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-9);
    for (Eigen::Index i = 1; i < 4; ++i) CHECK(sol.values[i] >= sol.values[i - 1]);
  }
}

TEST_CASE("dense and iterative paths agree at n=8") {
  std::mt19937_64 rng(17);
  IsingModel m = random_ising(rng, 8);
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  SolverOptions dense;
  dense.method = SolverOptions::Method::Dense;
  SolverOptions lanczos;
  lanczos.method = SolverOptions::Method::Lanczos;
  for (double s : {0.2, 0.5, 0.9}) {
    EigenSolution a = lowest_eigenpairs(sys, s, 4, dense);
    EigenSolution b = lowest_eigenpairs(sys, s, 4, lanczos);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-9);
  }
}

TEST_CASE("variational lower bound on random unit vectors") {
  IsingModel m = chain5_ising(1.51, 4.0);
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (double s : {0.25, 0.7262, 0.95}) {
    const double e0 = lowest_eigenpairs(sys, s, 1).values[0];
    for (int rep = 0; rep < 100; ++rep) {
      Vector u = Vector::NullaryExpr(sys.dimension(), [&](Eigen::Index) { return gauss(rng); });
      u.normalize();
      CHECK(e0 <= u.dot(sys.apply(s, u)) + 1e-12);
    }
  }
}

TEST_CASE("sweep: positive gap away from s=1 and phase continuity") {
  IsingModel m = chain5_ising(1.49, 1.52);
  SystemHamiltonian sys(m, DriverSpec::x_driver());
  SpectralSweep sw = sweep(sys, make_grid(0.01), 3);
  for (std::size_t i = 0; i + 1 < sw.grid.size(); ++i) {
    CHECK(gap_from_values(sw.solutions[i].values) > 0.0);
    if (i > 0)
      for (int k = 0; k < 3; ++k)
        CHECK(sw.solutions[i - 1].vectors.col(k).dot(sw.solutions[i].vectors.col(k)) >= 0.0);
  }
}

TEST_CASE("locate_min_gap reproduces the chain-5 landmark points") {
  struct Case {
    double w4, lambda, s_star, gap;
  };
  // tabulated (s*, min gap) reference values for the X driver
  const Case cases[] = {
      {1.49, 1.52, 0.7479, 0.0018},
      {1.51, 4.0, 0.7262, 3.8e-4},
      {1.49, 10.0, 0.95, 0.0389},
      {1.51, 100.0, 0.76147, 7.136e-5},
  };
  for (const Case& c : cases) {
    CAPTURE(c.w4);
    CAPTURE(c.lambda);
    SystemHamiltonian sys(chain5_ising(c.w4, c.lambda), DriverSpec::x_driver());
    MinGapResult r = locate_min_gap(sys);
    CHECK(std::abs(r.s_star - c.s_star) <= 0.01);
    CHECK(std::abs(r.min_gap - c.gap) <= 0.05 * c.gap);
    // the refined minimum does not exceed any coarse grid point
    for (const GapPoint& p : r.coarse)
      if (p.s < 1.0) CHECK(r.min_gap <= p.gap + 1e-12);
  }
}

TEST_CASE("chain7 min gap at J=2") {
  WeightedGraph g = gen_chain7();
  g.set_uniform_penalty(2.0);
  SystemHamiltonian sys(mis_to_ising(g), DriverSpec::x_driver());
  MinGapResult r = locate_min_gap(sys);
  CHECK(std::abs(r.s_star - 0.84375) <= 0.01);
  CHECK(std::abs(r.min_gap - 0.00155) <= 0.05 * 0.00155);
}

TEST_CASE("fit_gap_exponent on synthetic data") {
  SUBCASE("exact exponential") {
    std::vector<std::pair<int, double>> pts;
    for (int n = 4; n <= 14; n += 2) pts.push_back({n, std::exp(-0.5 * n)});
    GapFit fit = fit_gap_exponent(pts);
    CHECK(fit.c == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("constant gaps give zero slope") {
    std::vector<std::pair<int, double>> pts = {{4, 0.25}, {6, 0.25}, {8, 0.25}, {10, 0.25}};
    CHECK(fit_gap_exponent(pts).c == doctest::Approx(0.0));
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS(fit_gap_exponent({{4, 1.0}, {6, 0.5}, {8, 0.1}}));
    CHECK_THROWS(fit_gap_exponent({{4, 1.0}, {6, 0.5}, {8, 0.1}, {10, -0.1}}));
  }
}
