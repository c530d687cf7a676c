// test_specfun.cpp
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bbrad/specfun.hpp"
#include "oracles.hpp"

namespace specfun = bbrad::specfun;

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using bbrad::specfun::exact_cos2_average;
using bbrad::specfun::kPi;
using bbrad::specfun::solid_angle;
using bbrad::specfun::wallis_integral;
using bbrad::specfun::zeta;

TEST_CASE("gamma reproduces exact and frozen reference values") {
  CHECK_THAT(specfun::gamma(1.0), WithinRel(1.0, 1e-13));
  CHECK_THAT(specfun::gamma(4.0), WithinRel(6.0, 1e-13));
  CHECK_THAT(specfun::gamma(0.5), WithinRel(1.7724538509055161, 1e-13));   // sqrt(pi)
  CHECK_THAT(specfun::gamma(2.5), WithinRel(1.3293403881791370, 1e-13));   // (3/4) sqrt(pi)
  CHECK_THAT(specfun::gamma(7.5), WithinRel(1871.2543057977884, 1e-13));
  CHECK_THAT(specfun::gamma(10.5), WithinRel(1133278.3889487856, 1e-13));
  CHECK_THAT(specfun::gamma(20.0), WithinRel(1.21645100408832e17, 1e-13));
  CHECK_THAT(specfun::gamma(50.5), WithinRel(4.2904629123519598e63, 1e-13));
  CHECK_THAT(specfun::gamma(100.25), WithinRel(2.9484662818387699e156, 1e-13));
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x = 0.5; x <= 50.0; x += 0.5) {
    CHECK_THAT(specfun::gamma(x + 1.0), WithinRel(x * specfun::gamma(x), 1e-12));
  }
}

TEST_CASE("gamma duplication formula") {
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);
  for (double z = 1.0; z <= 10.0; z += 0.5) {
    const double lhs = specfun::gamma(2.0 * z);
    const double rhs =
        std::pow(2.0, 2.0 * z - 0.5) * inv_sqrt_2pi * specfun::gamma(z) * specfun::gamma(z + 0.5);
    CHECK_THAT(rhs, WithinRel(lhs, 1e-12));
  }
}

TEST_CASE("gamma stays finite to the top of the double range") {
  CHECK_THAT(specfun::gamma(150.0), WithinRel(3.8089226376305698e260, 1e-13));
  CHECK_THAT(specfun::gamma(171.5), WithinRel(9.483367566824799e307, 5e-13));
  // Beyond ~171.62 the exact value exceeds DBL_MAX; +inf is correct rounding.
  CHECK(std::isinf(specfun::gamma(172.0)));
  CHECK(std::isinf(specfun::gamma(200.0)));
}

TEST_CASE("gamma rejects out-of-domain arguments") {
  CHECK_THROWS_AS(specfun::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(specfun::gamma(200.5), std::domain_error);
  CHECK_THROWS_AS(specfun::gamma(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("zeta agrees with the brute-force series oracle") {
  for (double s : {1.1, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.5, 8.0, 12.0, 20.0}) {
    CHECK_THAT(zeta(s), WithinRel(oracles::zeta_brute(s), 1e-13));
  }
}

TEST_CASE("zeta reproduces frozen reference values") {
  CHECK_THAT(zeta(4.0), WithinRel(1.0823232337111382, 1e-13));  // pi^4 / 90
  CHECK_THAT(zeta(2.0), WithinRel(1.6449340668482264, 1e-13));  // pi^2 / 6
  CHECK_THAT(zeta(3.0), WithinRel(1.2020569031595943, 1e-13));
  CHECK_THAT(zeta(5.0), WithinRel(1.0369277551433699, 1e-13));
}

TEST_CASE("zeta decreases monotonically toward 1") {
  double prev = zeta(1.05);
  for (double s = 1.25; s <= 30.0; s += 0.25) {
    const double z = zeta(s);
    CHECK(z < prev);
    CHECK(z > 1.0);
    prev = z;
  }
  CHECK(zeta(20.0) - 1.0 <= 1e-5);
  CHECK_THAT(zeta(20.0) - 1.0, WithinRel(9.5396203387279621e-7, 1e-10));
}

TEST_CASE("zeta rejects the pole and the divergent region") {
  CHECK_THROWS_AS(zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta(0.5), std::domain_error);
  CHECK_THROWS_AS(zeta(-3.0), std::domain_error);
}

TEST_CASE("solid angle matches the closed forms in low dimensions") {
  CHECK_THAT(solid_angle(1), WithinRel(2.0, 1e-13));
  CHECK_THAT(solid_angle(2), WithinRel(6.2831853071795862, 1e-13));   // 2 pi
  CHECK_THAT(solid_angle(3), WithinRel(12.566370614359172, 1e-13));   // 4 pi
  CHECK_THAT(solid_angle(4), WithinRel(19.739208802178716, 1e-13));   // 2 pi^2
  CHECK_THROWS_AS(solid_angle(0), std::domain_error);
  CHECK_THROWS_AS(solid_angle(-2), std::domain_error);
}

TEST_CASE("solid angle agrees with a Monte Carlo ball-volume oracle") {
  const auto mc = oracles::solid_angle_mc(4, 400000, 0xB0B5u);
  CHECK_THAT(solid_angle(4), WithinAbs(mc.mean, 5.0 * mc.std_error));
}

TEST_CASE("solid angle factorizes into the Wallis product") {
  // Omega_{d-1} = 2 pi * prod_{n=1}^{d-2} W(n)
  for (int d = 2; d <= 10; ++d) {
    double product = 2.0 * kPi;
    for (int n = 1; n <= d - 2; ++n) product *= wallis_integral(n);
    CHECK_THAT(solid_angle(d), WithinRel(product, 1e-12));
  }
}

TEST_CASE("wallis integral closed form") {
  CHECK_THAT(wallis_integral(0), WithinRel(3.141592653589793, 1e-13));
  CHECK_THAT(wallis_integral(1), WithinRel(2.0, 1e-13));
  CHECK_THAT(wallis_integral(2), WithinRel(1.5707963267948966, 1e-13));
  CHECK_THROWS_AS(wallis_integral(-1), std::domain_error);
}

TEST_CASE("wallis integral agrees with a Simpson oracle") {
  for (int n = 0; n <= 8; ++n) {
    const double ref = oracles::simpson(
        [n](double t) { return std::pow(std::sin(t), n); }, 0.0, kPi, 4096);
    CHECK_THAT(wallis_integral(n), WithinRel(ref, 1e-9));
  }
}

TEST_CASE("cos^2 average equals 1/d through the Gamma ratio") {
  CHECK(exact_cos2_average(1) == 1.0);
  CHECK_THAT(exact_cos2_average(3), WithinRel(1.0 / 3.0, 1e-13));
  CHECK_THAT(exact_cos2_average(4), WithinRel(0.25, 1e-13));
  for (int d = 1; d <= 12; ++d) {
    CHECK_THAT(exact_cos2_average(d) * d, WithinRel(1.0, 1e-12));
  }
  CHECK_THROWS_AS(exact_cos2_average(0), std::domain_error);
}

TEST_CASE("cos^2 average agrees with a sphere-sampling oracle") {
  const auto mc = oracles::sphere_mc(
      4, 200000, 0xC0FFEEu,
      [](const std::vector<double>& v) { return v[0] * v[0]; });
  CHECK_THAT(exact_cos2_average(4), WithinAbs(mc.mean, 5.0 * mc.std_error));
}
