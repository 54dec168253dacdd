#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monogamy/discord.hpp"
#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/states.hpp"
#include "oracles.hpp"

using namespace monogamy;

namespace {

DensityMatrix c1c2r1(double alpha, double kappa_t) {
  return partial_trace(DensityMatrix::from_pure(cavity_output(alpha, kappa_t)), {0, 1, 2});
}

}  // namespace

TEST_CASE("measurement bases are orthonormal") {
  for (double t : {0.0, 0.7, std::numbers::pi}) {
    const auto b = QubitMeasurement{t, 1.3}.basis();
    CHECK(std::abs(b[0].dot(b[1])) <= 1e-15);
    CHECK(b[0].norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("conditional entropy after a measurement") {
  const DensityMatrix ra = random_mixed({2}, 2, 1);
  const DensityMatrix prod = tensor_product(ra, random_mixed({2}, 2, 2));
  const double sa = oracle::entropy_bits(oracle::hermitian_eigenvalues(ra.matrix()));
  for (double t : {0.0, 1.0, 2.5}) {
    CHECK(conditional_entropy_after_measurement(prod, 1, {t, 0.4}) == doctest::Approx(sa).epsilon(1e-10));
  }
  CHECK(std::abs(conditional_entropy_after_measurement(DensityMatrix::from_pure(bell()), 1, {})) <= 1e-12);
  // sigma_x on one half of a Bell pair also leaves pure outcomes.
  CHECK(std::abs(conditional_entropy_after_measurement(DensityMatrix::from_pure(bell()), 0,
                                                       {std::numbers::pi / 2, 0.0})) <= 1e-12);
}

TEST_CASE("discord examples") {
  Matrix cc = Matrix::Zero(4, 4);
  cc(0, 0) = 0.3;
  cc(3, 3) = 0.7;
  CHECK(std::abs(discord(DensityMatrix(cc, {2, 2}), 1).value) <= 1e-8);

  const DensityMatrix prod = tensor_product(random_mixed({2}, 2, 5), random_mixed({2}, 2, 6));
  CHECK(std::abs(discord(prod, 1).value) <= 1e-9);

  const DiscordResult b = discord(DensityMatrix::from_pure(bell()), 1);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(b.conditional_entropy == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(b.measured_conditional_entropy) <= 1e-8);
}

TEST_CASE("discord is non-negative on rank-2 three-qubit states") {
  for (int k = 0; k < 500; ++k) {
    const DensityMatrix rho = random_mixed({2, 2, 2}, 2, derive_seed(808, k));
    CHECK(discord(rho, k % 3).value >= -1e-9);
  }
}

TEST_CASE("discord serial and parallel grids agree") {
  const DensityMatrix rho = random_mixed({2, 2, 2}, 2, 99);
  DiscordOptions s;
  DiscordOptions p;
  p.execution = Execution::parallel;
  const DiscordResult a = discord(rho, 2, s);
  const DiscordResult b = discord(rho, 2, p);
  CHECK(a.value == b.value);
  CHECK(a.measurement.theta == b.measurement.theta);
  CHECK(a.measurement.phi == b.measurement.phi);
}

TEST_CASE("Koashi-Winter EoF") {
  for (int k = 0; k < 5; ++k) {
    const PureState psi = haar_random_pure({2, 2, 2}, derive_seed(1, k));
    CHECK(eof_via_koashi_winter(DensityMatrix::from_pure(psi), 1) ==
          doctest::Approx(eof_pure_bipartite(psi, {1})).epsilon(1e-9));
  }
  CHECK_THROWS_AS(eof_via_koashi_winter(random_mixed({2, 2, 2}, 3, 1), 0), UnsupportedRank);
  CHECK_THROWS_AS(eof_via_koashi_winter(random_mixed({2, 2}, 4, 1), 0), UnsupportedRank);
}

TEST_CASE("Koashi-Winter matches Wootters on rank-2 two-qubit states") {
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = random_mixed({2, 2}, 2, derive_seed(2, k));
    const double w = eof_from_concurrence(std::min(1.0, oracle::concurrence(rho.matrix())));
    CHECK(std::abs(eof_via_koashi_winter(rho, k % 2) - w) <= 1e-4);
  }
}

TEST_CASE("cavity closed form") {
  CHECK(std::abs(eof_c1_c2r1_closed_form(1.0, 0.7)) <= 1e-12);
  for (double a : {0.2, 0.5, 0.8}) {
    const double b2 = 1.0 - a * a;
    const double x = 0.5 * (1.0 - std::sqrt(1.0 - 4.0 * b2 * (1.0 - b2)));
    CHECK(eof_c1_c2r1_closed_form(a, 0.0) == doctest::Approx(oracle::binary_entropy(x)).epsilon(1e-10));
    CHECK(eof_c1_c2r1_closed_form(a, 0.0) ==
          doctest::Approx(eof_pure_bipartite(cavity_output(a, 0.0), {0})).epsilon(1e-10));
  }
  CHECK(eof_c1_c2r1_closed_form(0.6, 0.9) == doctest::Approx(eof_via_koashi_winter(c1c2r1(0.6, 0.9), 0)).epsilon(1e-6));
  CHECK_THROWS_AS(eof_c1_c2r1_closed_form(0.5, -1.0), ContractViolation);
}

TEST_CASE("closed form and Koashi-Winter agree on a grid") {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double alpha = (i + 0.5) / 10.0;
      const double kt = 3.0 * (j + 0.5) / 10.0;
      const KoashiWinterResult kw = koashi_winter(c1c2r1(alpha, kt), 0);
      CHECK(std::abs(kw.eof - eof_c1_c2r1_closed_form(alpha, kt)) <= 1e-6);
      CHECK(kw.rank <= 2);
    }
  }
}

TEST_CASE("sigma_x is the optimal measurement on the physical purifier") {
  // For rho_{c1 c2 r1} the purifier is r2, so measure r2 in rho_{c1 r2}.
  for (double alpha : {0.3, 0.6, 0.9}) {
    for (double kt : {0.2, 0.9, 2.5}) {
      const DensityMatrix rho = partial_trace(DensityMatrix::from_pure(cavity_output(alpha, kt)), {0, 3});
      const double sx = conditional_entropy_after_measurement(rho, 1, {std::numbers::pi / 2, 0.0});
      const DiscordResult d = discord(rho, 1);
      CHECK(d.measured_conditional_entropy <= sx + 1e-9);
      CHECK(std::abs(d.measured_conditional_entropy - sx) <= 1e-6);
      CHECK(std::abs(d.measurement.theta - std::numbers::pi / 2) <= std::numbers::pi / 64);
      // The state is phase covariant on r2, so every equatorial basis ties with sigma_x.
      for (double phi : {0.5, 1.7, 4.0}) {
        CHECK(std::abs(conditional_entropy_after_measurement(rho, 1, {std::numbers::pi / 2, phi}) - sx) <= 1e-12);
      }
      CHECK(conditional_entropy_after_measurement(rho, 1, {0.0, 0.0}) > sx + 1e-6);
    }
  }
}
