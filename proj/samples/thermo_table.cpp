// thermo_table.cpp - print the radiation constants for a few dimensions
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <cstdio>

#include "bbrad/closedform.hpp"

int main() {
  using namespace bbrad::closedform;
  const Temperature tau(1.0);
  std::printf("%3s %3s  %-22s %-22s %-22s\n", "D", "g", "rho/tau^D", "p/tau^D",
              "p*d/rho");
  for (int D = 2; D <= 8; ++D) {
    const SpacetimeDim dim(D);
    for (const Species& sp : {Species::scalar(), Species::photon()}) {
      if (sp.kind() == Species::Kind::photon && D < 3) continue;
      const double rho = energy_density(dim, sp, tau);
      const double p = pressure(dim, sp, tau);
      std::printf("%3d %3d  %-22.16g %-22.16g %-22.16g\n", D,
                  sp.multiplicity(dim), rho, p, p * dim.d() / rho);
    }
  }
  return 0;
}
