// quadrature.hpp - adaptive evaluation of the Bose-Einstein radial integrals
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbrad/closedform.hpp"
#include "bbrad/summation.hpp"

namespace bbrad::quadrature {

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadResult {
  double value;
  double abs_error_estimate;
  std::int64_t n_evaluations;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

template <class F>
Segment gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kWg[(i - 1) / 2] * (f1 + f2);
  }
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * half};
}

// Adaptive bisection over a set of seed intervals; worst-error segment is
// split until the summed error estimate meets rel_tol.  Heap order is broken
// by the left endpoint so runs are fully deterministic.
template <class F>
QuadResult integrate(const F& f, const std::vector<double>& breakpoints,
                     double rel_tol, int max_segments) {
  auto worse = [](const Segment& x, const Segment& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  };

  std::vector<Segment> heap;
  std::int64_t n_eval = 0;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    heap.push_back(gk15(f, breakpoints[i], breakpoints[i + 1]));
    n_eval += 15;
  }
  std::make_heap(heap.begin(), heap.end(), worse);

  auto totals = [&heap] {
    std::vector<Segment> ordered(heap);
    std::sort(ordered.begin(), ordered.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    NeumaierSum value;
    double error = 0.0;
    for (const Segment& s : ordered) {
      value.add(s.value);
      error += s.error;
    }
    return std::pair<double, double>(value.value(), error);
  };

  double value = 0.0, error = 0.0;
  std::tie(value, error) = totals();
  while (error > rel_tol * std::abs(value)) {
    if (static_cast<int>(heap.size()) >= max_segments) {
      throw convergence_error(
          "quadrature: error estimate " + std::to_string(error) +
          " did not reach the requested tolerance within the segment budget");
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Segment seg = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (seg.a + seg.b);
    heap.push_back(gk15(f, seg.a, mid));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(gk15(f, mid, seg.b));
    std::push_heap(heap.begin(), heap.end(), worse);
    n_eval += 30;
    std::tie(value, error) = totals();
  }
  return {value, error, n_eval};
}

}  // namespace detail

// \int_0^\infty x^n / (e^x - 1) dx, n > 0.  Split at x = 1 to let the
// subdivision concentrate on the x^{n-1} endpoint behaviour, truncated at
// X = 60 + 10 n where the integrand is below x^n e^{-x} and the discarded
// tail is under 1e-16 of the total.  expm1 keeps the denominator accurate near
// the origin.
inline QuadResult bose_integral(double n, double rel_tol,
                                int max_segments = 4000) {
  if (!(n > 0.0)) {
    throw std::domain_error("bose_integral: exponent must be > 0, got " +
                            std::to_string(n));
  }
  if (!(rel_tol >= 1e-13)) {
    throw std::domain_error(
        "bose_integral: tolerances below 1e-13 are not attainable in double "
        "precision");
  }
  const double x_max = 60.0 + 10.0 * n;
  auto f = [n](double x) { return std::pow(x, n) / std::expm1(x); };
  return detail::integrate(f, {0.0, 1.0, x_max}, rel_tol, max_segments);
}

// Energy density of a massless Bose gas from the momentum-space integral,
//   rho = g * Omega_{d-1} / (2 pi)^d * \int_0^\infty k^{d-1} k n(k) dk,
// reduced by x = k/tau to the dimensionless Bose integral above.  This is
// the numerical oracle for closedform::energy_density.
inline QuadResult radial_energy_density(closedform::SpacetimeDim dim,
                                        const closedform::Species& species,
                                        closedform::Temperature tau,
                                        double rel_tol,
                                        int max_segments = 4000) {
  const double g = species.multiplicity(dim);
  const double prefactor = g * specfun::solid_angle(dim.d()) /
                           std::pow(closedform::kTwoPi, dim.d()) *
                           std::pow(tau.value(), dim.D());
  const QuadResult radial = bose_integral(dim.D() - 1.0, rel_tol, max_segments);
  return {prefactor * radial.value, prefactor * radial.abs_error_estimate,
          radial.n_evaluations};
}

}  // namespace bbrad::quadrature
