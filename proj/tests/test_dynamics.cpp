#include <doctest.h>

#include <cmath>

#include "monogamy/dynamics.hpp"
#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"
#include "oracles.hpp"

using namespace monogamy;

TEST_CASE("POVM operators complete to the identity") {
  for (double a : {0.0, 0.3, 1.0}) {
    for (double b : {0.0, 0.8, 1.0}) {
      const PovmPair p = PovmPair::make(a, b);
      const Eigen::Matrix2cd sum = p.m1().adjoint() * p.m1() + p.m2().adjoint() * p.m2();
      CHECK((sum - Eigen::Matrix2cd::Identity()).norm() <= 1e-15);
    }
  }
  CHECK_THROWS_AS(PovmPair::make(1.2, 0.5), ContractViolation);
  CHECK_THROWS_AS(PovmPair::make(0.5, -0.1), ContractViolation);
}

TEST_CASE("POVM branch examples") {
  const DensityMatrix rho = random_mixed({2, 2}, 3, 8);
  const auto id = apply_local_povm(rho, 0, PovmPair::make(1.0, 1.0));
  REQUIRE(id.size() == 1);
  CHECK(id[0].probability == doctest::Approx(1.0));
  CHECK((id[0].state.matrix() - rho.matrix()).norm() <= 1e-14);

  Vector plus(2);
  plus << 1.0, 1.0;
  plus /= std::sqrt(2.0);
  const auto z = apply_local_povm(DensityMatrix::from_pure(PureState(plus, {2})), 0, PovmPair::make(1.0, 0.0));
  REQUIRE(z.size() == 2);
  CHECK(z[0].probability == doctest::Approx(0.5));
  CHECK(z[1].probability == doctest::Approx(0.5));
  CHECK(std::abs(z[0].state.matrix()(0, 0) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(z[1].state.matrix()(1, 1) - Complex(1.0)) <= 1e-14);
}

TEST_CASE("POVM probabilities sum to one") {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = random_mixed({2, 2, 2}, 1 + k % 8, derive_seed(44, k));
    const int sub = k % 3;
    const PovmPair p = PovmPair::make(rng.uniform(), rng.uniform());
    double total = 0.0;
    for (const PovmBranch& b : apply_local_povm(rho, sub, p)) {
      CHECK(b.probability >= 0.0);
      CHECK(b.probability <= 1.0);
      total += b.probability;
      CHECK(std::abs(b.state.matrix().trace() - Complex(1.0)) <= 1e-12);
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 3.0, 4);
  REQUIRE(v.size() == 4);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 3.0);
  CHECK(v[1] == doctest::Approx(1.0));
  CHECK(linspace(2.0, 5.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), ContractViolation);
}

TEST_CASE("cavity cells") {
  for (double kt : {0.0, 0.5, 3.0}) {
    const IndicatorReport r = tau2_c1_c2r1(CavityParams::make(1.0, kt));
    CHECK(std::abs(r.value) <= 1e-12);
  }
  const IndicatorReport bellish = tau2_c1_c2r1(CavityParams::make(1.0 / std::sqrt(2.0), 0.0));
  CHECK(bellish.component("ef2_c1c2") == doctest::Approx(1.0));
  CHECK(std::abs(bellish.component("ef2_c1r1")) <= 1e-12);
  CHECK(std::abs(bellish.value) <= 1e-12);
}

TEST_CASE("cavity grid") {
  const auto alphas = linspace(0.0, 1.0, 50);
  const auto kts = linspace(0.0, 3.0, 50);
  const auto cells = tau2_grid_c1_c2r1(alphas, kts, Execution::serial);
  REQUIRE(cells.size() == 2500);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CavityCell& c = cells[i];
    CHECK(c.alpha == alphas[i / 50]);
    CHECK(c.kappa_t == kts[i % 50]);
    CHECK(c.report.value >= -1e-6);
    const double lhs = c.report.component("ef2_c1_c2r1");
    CHECK(lhs >= c.report.component("ef2_c1c2") + c.report.component("ef2_c1r1") - 1e-6);
    // Bound from the pair EoFs.
    const double bound = eof_lower_bound({std::sqrt(std::max(0.0, c.report.component("ef2_c1c2"))),
                                          std::sqrt(std::max(0.0, c.report.component("ef2_c1r1")))});
    CHECK(bound <= std::sqrt(lhs) + 1e-6);
    // Independent pair EoFs from the Wootters oracle; its square roots of
    // near-zero eigenvalues limit agreement to about 1e-8.
    const PureState psi = cavity_output(c.alpha, c.kappa_t);
    const double c12 = oracle::concurrence(reduced_state(psi, {0, 2}).matrix());
    CHECK(std::abs(c.report.component("ef2_c1c2") - oracle::sef(std::min(1.0, c12 * c12))) <= 1e-6);
  }
  const auto par = tau2_grid_c1_c2r1(alphas, kts, Execution::parallel);
  for (std::size_t i = 0; i < cells.size(); ++i) CHECK(par[i].report.value == cells[i].report.value);
}

TEST_CASE("three-qubit cavity marginal has rank at most two") {
  for (double a : linspace(0.0, 1.0, 11)) {
    for (double kt : linspace(0.0, 3.0, 11)) {
      const DensityMatrix r = partial_trace(DensityMatrix::from_pure(cavity_output(a, kt)), {0, 1, 2});
      CHECK(numerical_rank(r) <= 2);
    }
  }
}

TEST_CASE("LOCC counterexample") {
  const LoccReport r = locc_counterexample();
  CHECK(std::abs(r.before.value - 0.0925) <= 1e-3);
  REQUIRE(r.branches.size() == 2);
  CHECK(std::abs(r.branches[0].probability - 0.6047) <= 1e-3);
  CHECK(r.branches[0].probability + r.branches[1].probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.branches[0].report.value - 0.0157) <= 1e-3);
  CHECK(std::abs(r.branches[1].report.value - 0.2376) <= 1e-3);
  CHECK(std::abs(r.average - 0.1034) <= 1e-3);
  CHECK(std::abs(r.difference - 0.0109) <= 2e-3);
  CHECK(r.difference > 0.0);
  CHECK(r.average == doctest::Approx(r.branches[0].probability * r.branches[0].report.value +
                                     r.branches[1].probability * r.branches[1].report.value));
}
