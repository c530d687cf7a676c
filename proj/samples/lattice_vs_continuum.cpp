// lattice_vs_continuum.cpp - watch the mode sums converge to the closed form
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <cstdio>

#include "bbrad/closedform.hpp"
#include "bbrad/modesum.hpp"

int main() {
  using namespace bbrad;
  const closedform::SpacetimeDim dim(4);
  const closedform::Temperature tau(1.0);

  std::printf("scalar gas, D = 4, tau = 1 (continuum rho = %.12g)\n",
              closedform::energy_density(dim, closedform::Species::scalar(), tau));
  const auto runs = modesum::continuum_convergence(
      dim, closedform::Species::scalar(), tau, {4.0, 8.0, 16.0});
  for (const auto& [box, deviation] : runs) {
    std::printf("  L = %4.1f  relative deviation = %.3e\n", box, deviation);
  }

  // the photon gas on the same lattice is exactly D-2 scalar copies
  const modesum::ModeLattice lattice(3, 8.0, modesum::auto_n_max(8.0, tau));
  const modesum::FieldParams params(0.0, tau);
  const auto scalar = modesum::scalar_observables(lattice, params);
  const auto photon = modesum::maxwell_observables(lattice, params);
  std::printf("photon/scalar density ratio on a shared lattice: %.16g\n",
              photon.rho / scalar.rho);
  std::printf("<F^2> / <E^2> = %.16g\n", photon.F_sq / photon.E_sq);
  return 0;
}
