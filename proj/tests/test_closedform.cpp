// test_closedform.cpp
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "bbrad/closedform.hpp"
#include "bbrad/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using bbrad::closedform::SpacetimeDim;
using bbrad::closedform::Species;
using bbrad::closedform::Temperature;
using bbrad::closedform::energy_density;
using bbrad::closedform::energy_equation_residual;
using bbrad::closedform::pressure;
using bbrad::closedform::sb_coefficient;
using bbrad::closedform::thermo_point;

namespace {
const Temperature kUnit(1.0);
}

TEST_CASE("dimension and temperature types enforce their invariants") {
  CHECK(SpacetimeDim(2).d() == 1);
  CHECK(SpacetimeDim(11).d() == 10);
  CHECK_THROWS_AS(SpacetimeDim(1), std::domain_error);
  CHECK_THROWS_AS(Temperature(0.0), std::domain_error);
  CHECK_THROWS_AS(Temperature(-1.0), std::domain_error);
  CHECK_THROWS_AS(Temperature(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("species multiplicity") {
  CHECK(Species::photon().multiplicity(SpacetimeDim(4)) == 2);
  CHECK(Species::photon().multiplicity(SpacetimeDim(6)) == 4);
  CHECK(Species::scalar().multiplicity(SpacetimeDim(7)) == 1);
  CHECK(Species::custom(5).multiplicity(SpacetimeDim(9)) == 5);
  // the photon degenerates in D = 2: no transverse direction is left
  CHECK_THROWS_AS(Species::photon().multiplicity(SpacetimeDim(2)),
                  std::domain_error);
  CHECK_THROWS_AS(Species::custom(0), std::domain_error);
}

TEST_CASE("Stefan-Boltzmann coefficients match their closed forms") {
  CHECK_THAT(sb_coefficient(SpacetimeDim(4), Species::scalar()),
             WithinRel(0.3289868133696453, 1e-12));  // pi^2 / 30
  CHECK_THAT(sb_coefficient(SpacetimeDim(4), Species::photon()),
             WithinRel(0.65797362673929061, 1e-12));  // pi^2 / 15
  CHECK_THAT(sb_coefficient(SpacetimeDim(5), Species::scalar()),
             WithinRel(0.3151882425081553, 1e-12));  // 3 zeta(5) / pi^2
  CHECK_THAT(sb_coefficient(SpacetimeDim(3), Species::scalar()),
             WithinRel(0.38262659603117033, 1e-12));  // zeta(3) / pi
}

TEST_CASE("coefficients confirmed against the quadrature oracle") {
  for (int D : {2, 3, 4, 5, 7}) {
    const auto oracle = bbrad::quadrature::radial_energy_density(
        SpacetimeDim(D), Species::scalar(), kUnit, 1e-12);
    CHECK_THAT(sb_coefficient(SpacetimeDim(D), Species::scalar()),
               WithinRel(oracle.value, 1e-9));
  }
}

TEST_CASE("energy density values and scaling") {
  CHECK_THAT(energy_density(SpacetimeDim(4), Species::scalar(), kUnit),
             WithinRel(0.3289868133696453, 1e-12));
  CHECK_THAT(energy_density(SpacetimeDim(4), Species::scalar(), Temperature(2.0)),
             WithinRel(5.2637890139143248, 1e-12));  // 16x the tau = 1 value
  CHECK_THAT(energy_density(SpacetimeDim(3), Species::scalar(), kUnit),
             WithinRel(0.38262659603117033, 1e-12));
}

TEST_CASE("pressure closed form") {
  CHECK_THAT(pressure(SpacetimeDim(4), Species::scalar(), kUnit),
             WithinRel(0.1096622711232151, 1e-12));  // pi^2 / 90
  CHECK_THAT(pressure(SpacetimeDim(5), Species::scalar(), kUnit),
             WithinRel(0.078797060627038826, 1e-12));  // 3 zeta(5) / (4 pi^2)
  // positive power of tau: the pressure vanishes with the temperature
  const double tiny = pressure(SpacetimeDim(4), Species::scalar(),
                               Temperature(1e-80));
  CHECK(tiny >= 0.0);
  CHECK(tiny < 1e-300);
}

TEST_CASE("pressure equals rho/d across dimensions and species") {
  for (int D = 2; D <= 11; ++D) {
    const SpacetimeDim dim(D);
    for (double tau : {0.5, 1.0, 3.0}) {
      const Temperature t(tau);
      const double p_scalar = pressure(dim, Species::scalar(), t);
      CHECK_THAT(energy_density(dim, Species::scalar(), t) / dim.d(),
                 WithinRel(p_scalar, 1e-12));
      if (D >= 3) {
        const double p_photon = pressure(dim, Species::photon(), t);
        CHECK_THAT(energy_density(dim, Species::photon(), t) / dim.d(),
                   WithinRel(p_photon, 1e-12));
      }
    }
  }
}

TEST_CASE("trace of the thermal energy-momentum tensor vanishes") {
  for (int D = 2; D <= 11; ++D) {
    const SpacetimeDim dim(D);
    const double rho = energy_density(dim, Species::scalar(), kUnit);
    const double p = pressure(dim, Species::scalar(), kUnit);
    CHECK_THAT(rho - dim.d() * p, WithinAbs(0.0, 1e-12 * rho));
  }
}

TEST_CASE("photon density is (D-2) times the scalar density") {
  for (int D = 3; D <= 11; ++D) {
    const SpacetimeDim dim(D);
    CHECK_THAT(energy_density(dim, Species::photon(), kUnit),
               WithinRel((D - 2) * energy_density(dim, Species::scalar(), kUnit),
                         1e-14));
  }
}

TEST_CASE("temperature dependence is the pure power tau^D") {
  for (int D = 2; D <= 11; ++D) {
    const SpacetimeDim dim(D);
    const double ratio = energy_density(dim, Species::scalar(), Temperature(2.0)) /
                         energy_density(dim, Species::scalar(), kUnit);
    CHECK_THAT(ratio, WithinRel(std::pow(2.0, D), 1e-12));

    const double slope =
        (std::log(energy_density(dim, Species::scalar(), Temperature(1.01))) -
         std::log(energy_density(dim, Species::scalar(), kUnit))) /
        std::log(1.01);
    CHECK_THAT(slope, WithinAbs(static_cast<double>(D), 1e-9));
  }
}

TEST_CASE("thermodynamic energy equation holds to truncation order") {
  const double r4 = energy_equation_residual(SpacetimeDim(4), Species::scalar(),
                                             kUnit, 1e-4);
  CHECK(std::abs(r4) <= 1e-7);

  const Temperature two(2.0);
  const double rho7 = energy_density(SpacetimeDim(7), Species::photon(), two);
  const double r7 = energy_equation_residual(SpacetimeDim(7), Species::photon(),
                                             two, 1e-4);
  CHECK(std::abs(r7) <= 1e-6 * rho7);

  const double rho2 = energy_density(SpacetimeDim(2), Species::scalar(), kUnit);
  const double r2 = energy_equation_residual(SpacetimeDim(2), Species::scalar(),
                                             kUnit, 1e-3);
  CHECK(std::abs(r2) <= 1e-5 * rho2);
}

TEST_CASE("finite-difference step validation") {
  CHECK_THROWS_AS(energy_equation_residual(SpacetimeDim(4), Species::scalar(),
                                           kUnit, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(energy_equation_residual(SpacetimeDim(4), Species::scalar(),
                                           kUnit, 1.0),
                  std::domain_error);
}

TEST_CASE("thermo point gathers the full state") {
  const auto pt = thermo_point(SpacetimeDim(4), Species::photon(), kUnit);
  CHECK(pt.D == 4);
  CHECK(pt.d == 3);
  CHECK(pt.species == "photon");
  CHECK(pt.multiplicity == 2);
  CHECK(pt.tau == 1.0);
  CHECK_THAT(pt.rho, WithinRel(0.65797362673929061, 1e-12));
  CHECK_THAT(pt.p, WithinRel(0.21932454224643019, 1e-12));  // pi^2 / 45
  CHECK_THAT(pt.coefficient, WithinRel(pt.rho, 1e-15));
  CHECK_THAT(pt.p * pt.d, WithinRel(pt.rho, 1e-12));
}
