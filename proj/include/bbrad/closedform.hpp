// closedform.hpp - exact black-body thermodynamics in D spacetime dimensions
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bbrad/specfun.hpp"

namespace bbrad::closedform {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Spacetime dimension D >= 2 with d = D - 1 spatial dimensions.
class SpacetimeDim {
 public:
  explicit SpacetimeDim(int D) : D_(D) {
    if (D < 2) {
      throw std::domain_error("SpacetimeDim: D must be >= 2, got " +
                              std::to_string(D));
    }
  }
  int D() const { return D_; }
  int d() const { return D_ - 1; }

 private:
  int D_;
};

// k_B T as an energy in natural units (hbar = c = k_B = 1).  Densities and
// pressures come out as pure numbers times tau^D.
class Temperature {
 public:
  explicit Temperature(double tau) : tau_(tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
      throw std::domain_error("Temperature: tau must be positive and finite");
    }
  }
  double value() const { return tau_; }

 private:
  double tau_;
};

// Radiation species: what multiplies the per-polarization gas.  A scalar has
// one degree of freedom, a photon has the D-2 transverse polarizations, and
// custom covers anything else (e.g. a graviton, whose count is left to the
// caller).
class Species {
 public:
  enum class Kind { scalar, photon, custom };

  static Species scalar() { return Species(Kind::scalar, 1); }
  static Species photon() { return Species(Kind::photon, 1); }
  static Species custom(int multiplicity) {
    if (multiplicity < 1) {
      throw std::domain_error("Species: custom multiplicity must be >= 1");
    }
    return Species(Kind::custom, multiplicity);
  }

  Kind kind() const { return kind_; }

  std::string_view name() const {
    switch (kind_) {
      case Kind::scalar: return "scalar";
      case Kind::photon: return "photon";
      default: return "custom";
    }
  }

  int multiplicity(SpacetimeDim dim) const {
    switch (kind_) {
      case Kind::scalar:
        return 1;
      case Kind::photon:
        if (dim.D() < 3) {
          throw std::domain_error(
              "Species: a photon needs D >= 3 (it has D-2 polarizations)");
        }
        return dim.D() - 2;
      default:
        return custom_g_;
    }
  }

 private:
  Species(Kind kind, int g) : kind_(kind), custom_g_(g) {}
  Kind kind_;
  int custom_g_;
};

inline int multiplicity(const Species& species, SpacetimeDim dim) {
  return species.multiplicity(dim);
}

// The generalized Stefan-Boltzmann coefficient C in rho = C tau^D:
//   C = g * Omega_{d-1} / (2 pi)^d * Gamma(D) zeta(D).
inline double sb_coefficient(SpacetimeDim dim, const Species& species) {
  const double g = species.multiplicity(dim);
  return g * specfun::solid_angle(dim.d()) / std::pow(kTwoPi, dim.d()) *
         specfun::gamma(dim.D()) * specfun::zeta(dim.D());
}

inline double energy_density(SpacetimeDim dim, const Species& species,
                             Temperature tau) {
  return sb_coefficient(dim, species) * std::pow(tau.value(), dim.D());
}

// Pressure from its own closed form,
//   p = g * Gamma(D/2) / pi^{D/2} * zeta(D) * tau^D,
// rather than as rho/d.  The two routes agree through the Gamma duplication
// formula, which the tests then verify as a genuine identity.
inline double pressure(SpacetimeDim dim, const Species& species,
                       Temperature tau) {
  const double g = species.multiplicity(dim);
  return g * specfun::gamma(0.5 * dim.D()) /
         std::pow(specfun::kPi, 0.5 * dim.D()) * specfun::zeta(dim.D()) *
         std::pow(tau.value(), dim.D());
}

// One fully evaluated state point.
struct ThermoPoint {
  int D;
  int d;
  std::string species;
  int multiplicity;
  double tau;
  double rho;
  double p;
  double coefficient;  // C with rho = C tau^D
};

inline ThermoPoint thermo_point(SpacetimeDim dim, const Species& species,
                                Temperature tau) {
  return ThermoPoint{dim.D(),
                     dim.d(),
                     std::string(species.name()),
                     species.multiplicity(dim),
                     tau.value(),
                     energy_density(dim, species, tau),
                     pressure(dim, species, tau),
                     sb_coefficient(dim, species)};
}

// Residual of the thermodynamic energy equation
//   (dU/dV)_T = T (dp/dT)_V - p,
// i.e. rho - [tau dp/dtau - p], with the derivative taken by a central
// difference.  For the power law the analytic residual vanishes, so the
// returned value is pure O(h^2) truncation.
inline double energy_equation_residual(SpacetimeDim dim, const Species& species,
                                       Temperature tau, double h) {
  if (!(h > 0.0) || h >= tau.value()) {
    throw std::domain_error(
        "energy_equation_residual: step must satisfy 0 < h < tau");
  }
  const double t = tau.value();
  const double dpdt = (pressure(dim, species, Temperature(t + h)) -
                       pressure(dim, species, Temperature(t - h))) /
                      (2.0 * h);
  return energy_density(dim, species, tau) -
         (t * dpdt - pressure(dim, species, tau));
}

}  // namespace bbrad::closedform
