// test_quadrature.cpp
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "bbrad/quadrature.hpp"
#include "bbrad/specfun.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using bbrad::closedform::SpacetimeDim;
using bbrad::closedform::Species;
using bbrad::closedform::Temperature;
using bbrad::quadrature::bose_integral;
using bbrad::quadrature::convergence_error;
using bbrad::quadrature::radial_energy_density;

TEST_CASE("bose integral reproduces frozen values") {
  CHECK_THAT(bose_integral(3.0, 1e-12).value,
             WithinRel(6.4939394022668289, 1e-11));  // pi^4 / 15
  CHECK_THAT(bose_integral(1.0, 1e-12).value,
             WithinRel(1.6449340668482264, 1e-10));  // zeta(2)
  CHECK_THAT(bose_integral(2.0, 1e-12).value,
             WithinRel(2.4041138063191885, 1e-10));  // 2 zeta(3)
}

TEST_CASE("bose integral matches Gamma(n+1) zeta(n+1)") {
  for (double n : {1.0, 1.5, 2.0, 3.0, 4.5, 7.0, 9.0}) {
    const auto r = bose_integral(n, 1e-11);
    const double exact =
        bbrad::specfun::gamma(n + 1.0) * bbrad::specfun::zeta(n + 1.0);
    CHECK_THAT(r.value, WithinRel(exact, 1e-10));
    // the a-posteriori estimate brackets the true error
    CHECK(std::abs(r.value - exact) <= r.abs_error_estimate + 1e-14 * exact);
    CHECK(r.abs_error_estimate >= 0.0);
    CHECK(r.n_evaluations > 0);
  }
}

TEST_CASE("requested tolerance is honored by the error estimate") {
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    const auto r = bose_integral(2.5, tol);
    CHECK(r.abs_error_estimate <= tol * std::abs(r.value));
  }
}

TEST_CASE("discarded tail is negligible") {
  // beyond the truncation point the integrand is under x^n e^-x
  const double n = 3.0;
  const double x_max = 60.0 + 10.0 * n;
  const double tail = oracles::simpson(
      [n](double x) { return std::pow(x, n) * std::exp(-x); }, x_max,
      x_max + 120.0, 512);
  CHECK(tail <= 1e-14 * bose_integral(n, 1e-12).value);
}

TEST_CASE("bose integral rejects bad arguments") {
  CHECK_THROWS_AS(bose_integral(0.0, 1e-10), std::domain_error);
  CHECK_THROWS_AS(bose_integral(-2.0, 1e-10), std::domain_error);
  CHECK_THROWS_AS(bose_integral(3.0, 1e-14), std::domain_error);
}

TEST_CASE("an exhausted segment budget reports non-convergence") {
  CHECK_THROWS_AS(bose_integral(1.5, 1e-13, 3), convergence_error);
}

TEST_CASE("radial energy density reproduces the closed-form values") {
  const Temperature unit(1.0);
  CHECK_THAT(radial_energy_density(SpacetimeDim(4), Species::scalar(), unit,
                                   1e-11).value,
             WithinRel(0.3289868133696453, 1e-9));
  CHECK_THAT(radial_energy_density(SpacetimeDim(4), Species::photon(), unit,
                                   1e-11).value,
             WithinRel(0.65797362673929061, 1e-9));
  CHECK_THAT(radial_energy_density(SpacetimeDim(2), Species::scalar(), unit,
                                   1e-11).value,
             WithinRel(0.52359877559829882, 1e-9));  // pi / 6
}

TEST_CASE("quadrature oracle agrees with closedform on a (D, tau) grid") {
  for (int D = 2; D <= 10; ++D) {
    const SpacetimeDim dim(D);
    for (double tau : {0.5, 1.0, 2.0}) {
      const Temperature t(tau);
      const double closed =
          bbrad::closedform::energy_density(dim, Species::scalar(), t);
      const auto r = radial_energy_density(dim, Species::scalar(), t, 1e-11);
      CHECK_THAT(r.value, WithinRel(closed, 1e-9));
    }
  }
}
