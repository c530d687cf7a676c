// modesum.hpp - thermal field-theory mode sums on a periodic-box lattice
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bbrad/closedform.hpp"
#include "bbrad/parallel.hpp"
#include "bbrad/summation.hpp"

namespace bbrad::modesum {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultModeBudget = 100'000'000;

// Thermal modes with omega / tau >= this are occupied below 5e-18, so a
// lattice truncated there is adequate for every tolerance used here.
inline constexpr double kCutoffRatio = 40.0;

// Periodic-box wavevector lattice: k = (2 pi / L) n for integer vectors n
// with 0 < max_i |n_i| <= n_max.  The zero mode is always excluded: the
// massless occupation diverges there, while its physical contribution per
// volume scales as tau / V and vanishes in the infinite-volume limit.
class ModeLattice {
 public:
  ModeLattice(int d, double box_edge, int n_max,
              std::int64_t mode_budget = kDefaultModeBudget) {
    if (d < 1) {
      throw std::domain_error("ModeLattice: d must be >= 1, got " +
                              std::to_string(d));
    }
    if (!(box_edge > 0.0) || !std::isfinite(box_edge)) {
      throw std::domain_error("ModeLattice: box edge must be positive");
    }
    if (n_max < 1) {
      throw std::domain_error("ModeLattice: n_max must be >= 1, got " +
                              std::to_string(n_max));
    }
    const double side = 2.0 * n_max + 1.0;
    const double estimate = std::pow(side, d) - 1.0;
    if (estimate > static_cast<double>(mode_budget) || estimate > 4.0e18) {
      throw budget_error("ModeLattice: " + std::to_string(estimate) +
                         " modes exceed the budget of " +
                         std::to_string(mode_budget));
    }
    d_ = d;
    box_edge_ = box_edge;
    n_max_ = n_max;
  }

  int spatial_dim() const { return d_; }
  double box_edge() const { return box_edge_; }
  int n_max() const { return n_max_; }
  double volume() const { return std::pow(box_edge_, d_); }
  double k_scale() const { return closedform::kTwoPi / box_edge_; }

  std::int64_t mode_count() const {
    std::int64_t count = 1;
    for (int i = 0; i < d_; ++i) count *= 2 * n_max_ + 1;
    return count - 1;
  }

  // True when the largest retained |k| already sits deep in the Boltzmann
  // tail for this temperature.
  bool cutoff_adequate(closedform::Temperature tau) const {
    return k_scale() * n_max_ / tau.value() >= kCutoffRatio;
  }

 private:
  int d_;
  double box_edge_;
  int n_max_;
};

inline ModeLattice build_lattice(int d, double box_edge, int n_max,
                                 std::int64_t mode_budget = kDefaultModeBudget) {
  return ModeLattice(d, box_edge, n_max, mode_budget);
}

// Smallest n_max that makes the cutoff adequate for (L, tau).
inline int auto_n_max(double box_edge, closedform::Temperature tau) {
  const double needed =
      kCutoffRatio * tau.value() * box_edge / closedform::kTwoPi;
  return std::max(1, static_cast<int>(std::ceil(needed)));
}

// Field mass and temperature for a thermal mode sum; mass 0 is the
// radiation case.
struct FieldParams {
  FieldParams(double mass_in, closedform::Temperature tau_in)
      : mass(mass_in), tau(tau_in) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
      throw std::domain_error("FieldParams: mass must be >= 0 and finite");
    }
  }
  double mass;
  closedform::Temperature tau;
};

// Bose-Einstein occupation 1 / (e^{omega/tau} - 1).  expm1 keeps small
// arguments accurate; omega -> 0+ diverges like tau/omega, which is why the
// zero mode is excluded upstream.
inline double occupation(double omega, closedform::Temperature tau) {
  if (!(omega > 0.0)) {
    throw std::domain_error("occupation: omega must be > 0");
  }
  return 1.0 / std::expm1(omega / tau.value());
}

struct ScalarObservables {
  double rho;                  // <T_00>
  std::vector<double> p_diag;  // <T_mm>, one entry per axis
  double trace;                // rho - sum(p_diag)
  double phi_dot_sq;           // <phidot^2>
  double grad_phi_sq;          // <(grad phi)^2>
  double phi_sq;               // <phi^2>
  double lagrangian_avg;       // <L> = (phidot^2 - (grad phi)^2 - m^2 phi^2)/2
  bool cutoff_adequate;
  std::int64_t mode_count;
};

struct MaxwellObservables {
  double E_sq;                 // <E_i E_i>
  double F_sq;                 // <F_ij F_ij>
  double rho;                  // <T_00> = E_sq/2 + F_sq/4
  std::vector<double> p_diag;  // <T_mm>
  double trace;                // rho - sum(p_diag)
  bool cutoff_adequate;
  std::int64_t mode_count;
};

namespace detail {

// Everything per mode depends on |n|^2 only (plus the component n_m^2 for
// the diagonal stresses), so the expensive occupation factor is tabulated
// once per integer |n|^2.  Table entries are the exact doubles a direct
// per-mode evaluation would produce.
struct ModeTables {
  std::vector<double> q;      // occupation / (omega V), by |n|^2
  std::vector<double> w2;     // omega^2 = k^2 + m^2, by |n|^2
  std::vector<double> k2;     // k^2, by |n|^2
  std::vector<double> omega;  // sqrt(w2), by |n|^2
  std::vector<double> km2;    // (k_scale j)^2, by component index j
};

inline ModeTables make_tables(const ModeLattice& lat, const FieldParams& par) {
  const int d = lat.spatial_dim();
  const int n_max = lat.n_max();
  const double ks = lat.k_scale();
  const double ks2 = ks * ks;
  const double m2 = par.mass * par.mass;
  const double inv_tau = 1.0 / par.tau.value();
  const double volume = lat.volume();
  const std::int64_t r2_max =
      static_cast<std::int64_t>(d) * n_max * static_cast<std::int64_t>(n_max);

  ModeTables t;
  t.q.assign(static_cast<size_t>(r2_max) + 1, 0.0);
  t.w2.assign(static_cast<size_t>(r2_max) + 1, 0.0);
  t.k2.assign(static_cast<size_t>(r2_max) + 1, 0.0);
  t.omega.assign(static_cast<size_t>(r2_max) + 1, 0.0);
  for (std::int64_t r2 = 1; r2 <= r2_max; ++r2) {
    const double k2 = ks2 * static_cast<double>(r2);
    const double w2 = k2 + m2;
    const double omega = std::sqrt(w2);
    const double occ = 1.0 / std::expm1(omega * inv_tau);
    t.k2[static_cast<size_t>(r2)] = k2;
    t.w2[static_cast<size_t>(r2)] = w2;
    t.omega[static_cast<size_t>(r2)] = omega;
    t.q[static_cast<size_t>(r2)] = occ / (omega * volume);
  }
  t.km2.assign(static_cast<size_t>(n_max) + 1, 0.0);
  for (int j = 0; j <= n_max; ++j) {
    t.km2[static_cast<size_t>(j)] = ks2 * static_cast<double>(j) * j;
  }
  return t;
}

// Visits every lattice vector with n[0] = lead, accumulating |n|^2 on the
// way down; body(n, n2) runs once per mode (the all-zero vector is skipped).
template <class Body>
void visit_slice(std::span<int> n, int pos, int n_max, std::int64_t n2,
                 Body& body) {
  if (pos == static_cast<int>(n.size())) {
    if (n2 != 0) body(n, n2);
    return;
  }
  for (int v = -n_max; v <= n_max; ++v) {
    n[pos] = v;
    visit_slice(n, pos + 1, n_max, n2 + static_cast<std::int64_t>(v) * v, body);
  }
}

// Chunked enumeration: one chunk per leading coordinate, partial sums
// reduced in ascending chunk order.  Worker count never changes the result.
template <class Partial, class Body>
std::vector<Partial> accumulate_chunks(const ModeLattice& lat, Body body) {
  const int d = lat.spatial_dim();
  const int n_max = lat.n_max();
  const std::int64_t n_chunks = 2 * static_cast<std::int64_t>(n_max) + 1;
  std::vector<Partial> parts(static_cast<size_t>(n_chunks));
  parallel::run_chunks(n_chunks, [&](std::int64_t c) {
    std::vector<int> n(static_cast<size_t>(d));
    const int lead = static_cast<int>(c) - n_max;
    n[0] = lead;
    Partial& p = parts[static_cast<size_t>(c)];
    auto per_mode = [&](std::span<int> vec, std::int64_t n2) {
      body(p, vec, n2);
    };
    visit_slice(std::span<int>(n), 1, n_max,
                static_cast<std::int64_t>(lead) * lead, per_mode);
  });
  return parts;
}

struct ScalarSums {
  double q;
  double w2q;
  double k2q;
  std::vector<double> diag;
};

inline ScalarSums accumulate_scalar(const ModeLattice& lat,
                                    const FieldParams& par) {
  const int d = lat.spatial_dim();
  const ModeTables tables = make_tables(lat, par);

  struct Partial {
    NeumaierSum q;
    NeumaierSum w2q;
    NeumaierSum k2q;
    std::vector<NeumaierSum> diag;
  };
  auto parts = accumulate_chunks<Partial>(
      lat, [&](Partial& p, std::span<int> n, std::int64_t n2) {
        if (p.diag.empty()) p.diag.resize(static_cast<size_t>(d));
        const double q = tables.q[static_cast<size_t>(n2)];
        if (q == 0.0) return;  // occupation underflowed; exact no-op
        p.q.add(q);
        p.w2q.add(tables.w2[static_cast<size_t>(n2)] * q);
        p.k2q.add(tables.k2[static_cast<size_t>(n2)] * q);
        for (int m = 0; m < d; ++m) {
          p.diag[static_cast<size_t>(m)].add(
              tables.km2[static_cast<size_t>(std::abs(n[m]))] * q);
        }
      });

  NeumaierSum q, w2q, k2q;
  std::vector<NeumaierSum> diag(static_cast<size_t>(d));
  for (const Partial& p : parts) {
    q.merge(p.q);
    w2q.merge(p.w2q);
    k2q.merge(p.k2q);
    for (int m = 0; m < d; ++m) {
      if (!p.diag.empty()) diag[static_cast<size_t>(m)].merge(p.diag[static_cast<size_t>(m)]);
    }
  }
  ScalarSums sums;
  sums.q = q.value();
  sums.w2q = w2q.value();
  sums.k2q = k2q.value();
  sums.diag.resize(static_cast<size_t>(d));
  for (int m = 0; m < d; ++m) sums.diag[static_cast<size_t>(m)] = diag[static_cast<size_t>(m)].value();
  return sums;
}

}  // namespace detail

// Thermal expectation values of the free scalar field on the lattice.  Per
// mode (with occupation n_k and q = n_k / (omega V)):
//   <phidot^2>       accumulates omega^2 q,
//   <(grad phi)^2>   accumulates k^2 q,
//   <phi^2>          accumulates q,
// and omega^2 is formed as k^2 + m^2, so in the massless case the first two
// sums are identical bit for bit and <L> vanishes exactly.
inline ScalarObservables scalar_observables(const ModeLattice& lattice,
                                            const FieldParams& params) {
  const int d = lattice.spatial_dim();
  const detail::ScalarSums sums = detail::accumulate_scalar(lattice, params);
  const double m2 = params.mass * params.mass;

  ScalarObservables obs;
  obs.phi_dot_sq = sums.w2q;
  obs.grad_phi_sq = sums.k2q;
  obs.phi_sq = sums.q;
  obs.lagrangian_avg =
      0.5 * (obs.phi_dot_sq - obs.grad_phi_sq - m2 * obs.phi_sq);
  obs.rho = 0.5 * obs.phi_dot_sq + 0.5 * obs.grad_phi_sq + 0.5 * m2 * obs.phi_sq;
  obs.p_diag.resize(static_cast<size_t>(d));
  for (int m = 0; m < d; ++m) {
    // <d_m phi d_m phi> plus the -eta_mm L part of T_mn
    obs.p_diag[static_cast<size_t>(m)] =
        sums.diag[static_cast<size_t>(m)] + obs.lagrangian_avg;
  }
  obs.trace = obs.rho - std::accumulate(obs.p_diag.begin(), obs.p_diag.end(), 0.0);
  obs.cutoff_adequate = lattice.cutoff_adequate(params.tau);
  obs.mode_count = lattice.mode_count();
  return obs;
}

// Thermal expectation values of the Maxwell field.  The polarization sum is
// carried out analytically through the completeness relation
//   sum_l e*_i e_j = delta_ij - k_i k_j / k^2,
// which leaves D-2 scalar-like degrees of freedom per mode and never needs
// explicit basis vectors:
//   <E^2> = (D-2) sum omega^2 q,   <F^2> = 2 (D-2) sum k^2 q,
//   <T_mn> = (D-2) k_m k_n q  plus an isotropic (F^2 - 2 E^2)-remainder
// that vanishes identically for the massless field.
inline MaxwellObservables maxwell_observables(const ModeLattice& lattice,
                                              const FieldParams& params) {
  const int d = lattice.spatial_dim();
  if (d < 2) {
    throw std::domain_error(
        "maxwell_observables: the Maxwell field needs D >= 3 (d >= 2)");
  }
  if (params.mass != 0.0) {
    throw std::domain_error("maxwell_observables: the Maxwell field is massless");
  }
  const double g = d - 1;  // D - 2 polarizations
  const detail::ScalarSums sums = detail::accumulate_scalar(lattice, params);

  MaxwellObservables obs;
  obs.E_sq = g * sums.w2q;
  obs.F_sq = 2.0 * (g * sums.k2q);
  obs.rho = 0.5 * obs.E_sq + 0.25 * obs.F_sq;
  const double isotropic_remainder = 0.25 * (2.0 * obs.E_sq - obs.F_sq);
  obs.p_diag.resize(static_cast<size_t>(d));
  for (int m = 0; m < d; ++m) {
    obs.p_diag[static_cast<size_t>(m)] =
        g * sums.diag[static_cast<size_t>(m)] + isotropic_remainder;
  }
  obs.trace = obs.rho - std::accumulate(obs.p_diag.begin(), obs.p_diag.end(), 0.0);
  obs.cutoff_adequate = lattice.cutoff_adequate(params.tau);
  obs.mode_count = lattice.mode_count();
  return obs;
}

// Largest |sum_k k_m k_n q| over axis pairs m != n.  Every mode is paired
// with its parity partner k -> -k inside the symmetric cutoff region, so the
// sum cancels to rounding; this is the numerical footing for <T_mn> being
// diagonal.
inline double off_diagonal_check(const ModeLattice& lattice,
                                 const FieldParams& params) {
  const int d = lattice.spatial_dim();
  if (d < 2) return 0.0;
  const detail::ModeTables tables = detail::make_tables(lattice, params);
  const double ks = lattice.k_scale();
  const int n_pairs = d * (d - 1) / 2;

  struct Partial {
    std::vector<NeumaierSum> pair;
  };
  auto parts = detail::accumulate_chunks<Partial>(
      lattice, [&](Partial& p, std::span<int> n, std::int64_t n2) {
        if (p.pair.empty()) p.pair.resize(static_cast<size_t>(n_pairs));
        const double q = tables.q[static_cast<size_t>(n2)];
        if (q == 0.0) return;
        int idx = 0;
        for (int m = 0; m < d; ++m) {
          const double km = ks * n[m];
          for (int l = m + 1; l < d; ++l, ++idx) {
            p.pair[static_cast<size_t>(idx)].add(km * (ks * n[l]) * q);
          }
        }
      });

  std::vector<NeumaierSum> pair(static_cast<size_t>(n_pairs));
  for (const Partial& p : parts) {
    if (p.pair.empty()) continue;
    for (int i = 0; i < n_pairs; ++i) pair[static_cast<size_t>(i)].merge(p.pair[static_cast<size_t>(i)]);
  }
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    worst = std::max(worst, std::abs(pair[static_cast<size_t>(i)].value()));
  }
  return worst;
}

// A spacetime probe point for <phi^2(x, t)>.
struct ProbePoint {
  std::vector<double> x;
  double t = 0.0;
};

// Evaluates <phi^2(x, t)> = sum_k q_k (cos^2 + sin^2)(k.x - omega t) at each
// probe point, keeping the per-mode phase factors explicit, and returns the
// maximum relative spread across the points.  The a a-dagger pairing makes
// the phases cancel mode by mode, so the spread sits at rounding level: the
// thermal <phi^2> is uniform, and gradients of phi^2 (the conformal
// improvement piece of T_mn) average to zero.
inline double phi_squared_uniformity(const ModeLattice& lattice,
                                     const FieldParams& params,
                                     std::span<const ProbePoint> probes) {
  if (probes.empty()) {
    throw std::domain_error("phi_squared_uniformity: need at least one probe");
  }
  const int d = lattice.spatial_dim();
  for (const ProbePoint& p : probes) {
    if (static_cast<int>(p.x.size()) != d) {
      throw std::domain_error(
          "phi_squared_uniformity: probe has wrong spatial dimension");
    }
  }
  const detail::ModeTables tables = detail::make_tables(lattice, params);
  const double ks = lattice.k_scale();

  std::vector<double> values(probes.size());
  parallel::run_chunks(static_cast<std::int64_t>(probes.size()),
                       [&](std::int64_t pi) {
    const ProbePoint& probe = probes[static_cast<size_t>(pi)];
    struct Partial {
      NeumaierSum sum;
    };
    auto parts = detail::accumulate_chunks<Partial>(
        lattice, [&](Partial& p, std::span<int> n, std::int64_t n2) {
          const double q = tables.q[static_cast<size_t>(n2)];
          if (q == 0.0) return;
          double dot = 0.0;
          for (int m = 0; m < d; ++m) dot += n[m] * probe.x[static_cast<size_t>(m)];
          const double phase =
              ks * dot - tables.omega[static_cast<size_t>(n2)] * probe.t;
          const double c = std::cos(phase);
          const double s = std::sin(phase);
          p.sum.add(q * (c * c + s * s));
        });
    NeumaierSum total;
    for (const Partial& p : parts) total.merge(p.sum);
    values[static_cast<size_t>(pi)] = total.value();
  });

  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*hi == 0.0) return 0.0;
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  return (*hi - *lo) / mean;
}

// Relative deviation of the lattice energy density from the closed form,
// for each box size in the schedule (n_max chosen by the cutoff rule).  The
// deviations shrink toward zero as the sums approach their infinite-volume
// integrals.
inline std::vector<std::pair<double, double>> continuum_convergence(
    closedform::SpacetimeDim dim, const closedform::Species& species,
    closedform::Temperature tau, const std::vector<double>& box_schedule,
    std::int64_t mode_budget = kDefaultModeBudget) {
  if (box_schedule.empty()) {
    throw std::domain_error("continuum_convergence: empty box schedule");
  }
  for (size_t i = 0; i + 1 < box_schedule.size(); ++i) {
    if (!(box_schedule[i] < box_schedule[i + 1])) {
      throw std::domain_error(
          "continuum_convergence: box schedule must be strictly increasing");
    }
  }
  const int g = species.multiplicity(dim);  // validates species/dim upfront
  const double reference = closedform::energy_density(dim, species, tau);
  const FieldParams params(0.0, tau);

  std::vector<std::pair<double, double>> result;
  result.reserve(box_schedule.size());
  for (double box : box_schedule) {
    const ModeLattice lattice(dim.d(), box, auto_n_max(box, tau), mode_budget);
    double rho = 0.0;
    if (species.kind() == closedform::Species::Kind::photon) {
      rho = maxwell_observables(lattice, params).rho;
    } else {
      rho = g * scalar_observables(lattice, params).rho;
    }
    result.emplace_back(box, std::abs(rho - reference) / reference);
  }
  return result;
}

}  // namespace bbrad::modesum
