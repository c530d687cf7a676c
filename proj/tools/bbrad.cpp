// bbrad.cpp - command-line front end
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
//
// Subcommands: thermo, sweep, mc-angle, modesum, verify.  Exit codes:
//   0 success, 1 verification failure, 2 usage or validation error,
//   3 mode budget exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bbrad/bbrad.hpp"
#include "bbrad/io.hpp"
#include "bbrad/verify.hpp"

namespace {

using bbrad::closedform::SpacetimeDim;
using bbrad::closedform::Species;
using bbrad::closedform::Temperature;
using bbrad::closedform::ThermoPoint;
using bbrad::io::CsvWriter;
using bbrad::io::JsonWriter;
using bbrad::io::format_real;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + output_path +
                                "'");
  }
  out << payload;
}

Species make_species(const std::string& name, int multiplicity) {
  if (name == "scalar") return Species::scalar();
  if (name == "photon") return Species::photon();
  if (name == "custom") return Species::custom(multiplicity);
  throw std::invalid_argument("unknown species '" + name +
                              "' (expected scalar, photon or custom)");
}

// "4", "2,3,7" or "2..5"
std::vector<int> parse_dimension_list(const std::string& text) {
  std::vector<int> dims;
  auto parse_int = [](const std::string& s) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dimension '" + s + "'");
    }
    if (used != s.size()) {
      throw std::invalid_argument("bad dimension '" + s + "'");
    }
    return value;
  };
  const size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (hi < lo) {
      throw std::invalid_argument("empty dimension range '" + text + "'");
    }
    for (int D = lo; D <= hi; ++D) dims.push_back(D);
    return dims;
  }
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) {
      throw std::invalid_argument("empty entry in dimension list '" + text +
                                  "'");
    }
    dims.push_back(parse_int(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

std::vector<double> parse_tau_list(const std::string& text) {
  std::vector<double> taus;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) {
      throw std::invalid_argument("empty entry in tau list '" + text + "'");
    }
    size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tau '" + item + "'");
    }
    if (used != item.size()) {
      throw std::invalid_argument("bad tau '" + item + "'");
    }
    taus.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (taus.empty()) throw std::invalid_argument("empty tau list");
  std::sort(taus.begin(), taus.end());
  return taus;
}

void write_point_fields(JsonWriter& w, const ThermoPoint& pt) {
  w.key("D").value(pt.D);
  w.key("d").value(pt.d);
  w.key("species").value(pt.species);
  w.key("multiplicity").value(pt.multiplicity);
  w.key("tau").value(pt.tau);
  w.key("rho").value(pt.rho);
  w.key("p").value(pt.p);
  w.key("C").value(pt.coefficient);
}

std::vector<std::string> point_row(const ThermoPoint& pt) {
  return {std::to_string(pt.D),      std::to_string(pt.d),
          pt.species,                std::to_string(pt.multiplicity),
          format_real(pt.tau),       format_real(pt.rho),
          format_real(pt.p),         format_real(pt.coefficient)};
}

const std::vector<std::string> kPointHeader = {"D",   "d",   "species", "g",
                                               "tau", "rho", "p",       "C"};

// ---------------------------------------------------------------- thermo --

struct ThermoArgs {
  int dimension = 4;
  std::string species = "scalar";
  int multiplicity = 1;
  double tau = 1.0;
  std::string format = "json";
  std::string output;
};

int cmd_thermo(const ThermoArgs& args) {
  const SpacetimeDim dim(args.dimension);
  const Species species = make_species(args.species, args.multiplicity);
  const ThermoPoint pt =
      bbrad::closedform::thermo_point(dim, species, Temperature(args.tau));
  if (args.format == "csv") {
    CsvWriter csv;
    csv.row(kPointHeader).row(point_row(pt));
    emit(csv.str(), args.output);
  } else {
    JsonWriter w;
    w.begin_object();
    write_point_fields(w, pt);
    w.end_object();
    emit(w.str(), args.output);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- sweep --

struct SweepArgs {
  std::string dimensions;
  std::string taus;
  std::string species = "scalar";
  int multiplicity = 1;
  std::string format = "csv";
  std::string output;
};

int cmd_sweep(const SweepArgs& args) {
  const std::vector<int> dims = parse_dimension_list(args.dimensions);
  const std::vector<double> taus = parse_tau_list(args.taus);
  const Species species = make_species(args.species, args.multiplicity);

  // validate the whole grid before emitting anything
  std::vector<ThermoPoint> points;
  for (int D : dims) {
    const SpacetimeDim dim(D);
    for (double tau : taus) {
      points.push_back(
          bbrad::closedform::thermo_point(dim, species, Temperature(tau)));
    }
  }

  if (args.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("rows").begin_array();
    for (const ThermoPoint& pt : points) {
      w.begin_object();
      write_point_fields(w, pt);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w.str(), args.output);
  } else {
    CsvWriter csv;
    csv.row(kPointHeader);
    for (const ThermoPoint& pt : points) csv.row(point_row(pt));
    emit(csv.str(), args.output);
  }
  return kExitOk;
}

// -------------------------------------------------------------- mc-angle --

struct McAngleArgs {
  int spatial_dimension = 3;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 20260809ull;
  std::string format = "json";
  std::string output;
};

int cmd_mc_angle(const McAngleArgs& args) {
  const auto est = bbrad::kinetics::mc_cos2_average(args.spatial_dimension,
                                                    args.samples, args.seed);
  const double exact =
      bbrad::specfun::exact_cos2_average(args.spatial_dimension);
  const double abs_error = std::abs(est.mean - exact);
  const bool within = abs_error <= 4.0 * est.std_error;
  if (args.format == "csv") {
    CsvWriter csv;
    csv.row({"d", "n_samples", "seed", "mean", "std_error", "exact"});
    csv.row({std::to_string(args.spatial_dimension),
             std::to_string(est.n_samples), std::to_string(est.seed),
             format_real(est.mean), format_real(est.std_error),
             format_real(exact)});
    emit(csv.str(), args.output);
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("d").value(args.spatial_dimension);
    w.key("n_samples").value(est.n_samples);
    w.key("seed").value(est.seed);
    w.key("mean").value(est.mean);
    w.key("std_error").value(est.std_error);
    w.key("exact").value(exact);
    w.key("abs_error").value(abs_error);
    w.key("within_four_sigma").value(within);
    w.end_object();
    emit(w.str(), args.output);
  }
  return kExitOk;
}

// --------------------------------------------------------------- modesum --

struct ModesumArgs {
  int dimension = 4;
  std::string species = "scalar";
  double tau = 1.0;
  double box = 8.0;
  int n_max = 0;  // 0: choose by the cutoff rule
  double mass = 0.0;
  std::int64_t budget = bbrad::modesum::kDefaultModeBudget;
  std::string format = "json";
  std::string output;
};

int cmd_modesum(const ModesumArgs& args) {
  if (args.species != "scalar" && args.species != "photon") {
    throw std::invalid_argument(
        "modesum supports species scalar or photon, got '" + args.species +
        "'");
  }
  const SpacetimeDim dim(args.dimension);
  const Temperature tau(args.tau);
  const Species species = make_species(args.species, 1);
  const int n_max =
      args.n_max > 0 ? args.n_max : bbrad::modesum::auto_n_max(args.box, tau);
  const bbrad::modesum::ModeLattice lattice(dim.d(), args.box, n_max,
                                            args.budget);
  const bbrad::modesum::FieldParams params(args.mass, tau);

  const bool is_photon = args.species == "photon";
  double rho = 0.0, trace = 0.0;
  std::vector<double> p_diag;
  bool adequate = false;

  JsonWriter w;
  w.begin_object();
  w.key("D").value(dim.D());
  w.key("d").value(dim.d());
  w.key("species").value(args.species);
  w.key("tau").value(args.tau);
  w.key("mass").value(args.mass);
  w.key("L").value(args.box);
  w.key("n_max").value(n_max);
  w.key("mode_count").value(lattice.mode_count());

  if (is_photon) {
    const auto obs = bbrad::modesum::maxwell_observables(lattice, params);
    rho = obs.rho;
    trace = obs.trace;
    p_diag = obs.p_diag;
    adequate = obs.cutoff_adequate;
    w.key("cutoff_adequate").value(adequate);
    w.key("observables").begin_object();
    w.key("rho").value(obs.rho);
    w.key("E_sq").value(obs.E_sq);
    w.key("F_sq").value(obs.F_sq);
    w.key("p_diag").begin_array();
    for (double p : obs.p_diag) w.value(p);
    w.end_array();
    w.key("trace").value(obs.trace);
    w.end_object();
  } else {
    const auto obs = bbrad::modesum::scalar_observables(lattice, params);
    rho = obs.rho;
    trace = obs.trace;
    p_diag = obs.p_diag;
    adequate = obs.cutoff_adequate;
    w.key("cutoff_adequate").value(adequate);
    w.key("observables").begin_object();
    w.key("rho").value(obs.rho);
    w.key("p_diag").begin_array();
    for (double p : obs.p_diag) w.value(p);
    w.end_array();
    w.key("trace").value(obs.trace);
    w.key("phi_dot_sq").value(obs.phi_dot_sq);
    w.key("grad_phi_sq").value(obs.grad_phi_sq);
    w.key("phi_sq").value(obs.phi_sq);
    w.key("lagrangian_avg").value(obs.lagrangian_avg);
    w.end_object();
  }

  // the closed form covers the massless gas only
  std::optional<double> reference;
  if (args.mass == 0.0) {
    reference = bbrad::closedform::energy_density(dim, species, tau);
    w.key("continuum").begin_object();
    w.key("rho_closedform").value(*reference);
    w.key("rel_deviation").value(std::abs(rho - *reference) / *reference);
    w.end_object();
  }
  w.end_object();

  if (args.format == "csv") {
    double p_mean = 0.0;
    for (double p : p_diag) p_mean += p;
    p_mean /= static_cast<double>(p_diag.size());
    CsvWriter csv;
    csv.row({"D", "d", "species", "tau", "mass", "L", "n_max", "mode_count",
             "cutoff_adequate", "rho", "p_mean", "trace", "rho_closedform",
             "rel_deviation"});
    csv.row({std::to_string(dim.D()), std::to_string(dim.d()), args.species,
             format_real(args.tau), format_real(args.mass),
             format_real(args.box), std::to_string(n_max),
             std::to_string(lattice.mode_count()), adequate ? "true" : "false",
             format_real(rho), format_real(p_mean), format_real(trace),
             reference ? format_real(*reference) : "",
             reference ? format_real(std::abs(rho - *reference) / *reference)
                       : ""});
    emit(csv.str(), args.output);
  } else {
    emit(w.str(), args.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  std::uint64_t seed = 20260809ull;
  std::vector<std::string> only;
  std::vector<std::string> tolerances;  // key=value
  std::string output;
};

int cmd_verify(const VerifyArgs& args) {
  bbrad::verify::Options options;
  options.seed = args.seed;
  options.only = args.only;
  for (const std::string& spec : args.tolerances) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
      throw std::invalid_argument("bad tolerance override '" + spec +
                                  "' (expected key=value)");
    }
    size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(spec.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tolerance value in '" + spec + "'");
    }
    if (used != spec.size() - eq - 1) {
      throw std::invalid_argument("bad tolerance value in '" + spec + "'");
    }
    options.tolerance_overrides[spec.substr(0, eq)] = value;
  }
  const bbrad::verify::Report report = bbrad::verify::run(options);
  emit(bbrad::verify::to_json(report), args.output);
  return report.overall_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "black-body radiation thermodynamics for massless quanta in D = d+1 "
      "spacetime dimensions"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key=value defaults in [subcommand] sections; flags override");
  app.allow_config_extras(false);

  ThermoArgs thermo;
  CLI::App* thermo_cmd = app.add_subcommand(
      "thermo", "closed-form energy density and pressure at one state point");
  thermo_cmd->add_option("-D,--dimension", thermo.dimension,
                         "spacetime dimension D >= 2")
      ->required();
  thermo_cmd->add_option("--species", thermo.species,
                         "scalar, photon or custom");
  thermo_cmd->add_option("--multiplicity", thermo.multiplicity,
                         "polarization count for species=custom");
  thermo_cmd->add_option("--tau", thermo.tau, "temperature k_B T (energy units)");
  thermo_cmd->add_option("--format", thermo.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  thermo_cmd->add_option("-o,--output", thermo.output, "write to file");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate rho, p and C over dimensions and temperatures");
  sweep_cmd->add_option("--dimensions", sweep.dimensions,
                        "range 2..7 or list 2,3,4")
      ->required();
  sweep_cmd->add_option("--tau", sweep.taus, "comma-separated temperatures")
      ->required();
  sweep_cmd->add_option("--species", sweep.species, "scalar, photon or custom");
  sweep_cmd->add_option("--multiplicity", sweep.multiplicity,
                        "polarization count for species=custom");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("-o,--output", sweep.output, "write to file");

  McAngleArgs mc;
  CLI::App* mc_cmd = app.add_subcommand(
      "mc-angle", "Monte Carlo average of cos^2 over the unit (d-1)-sphere");
  mc_cmd->add_option("-d,--spatial-dimension", mc.spatial_dimension,
                     "spatial dimension d >= 1")
      ->required();
  mc_cmd->add_option("-n,--samples", mc.samples, "sample count (>= 100)");
  mc_cmd->add_option("--seed", mc.seed, "PRNG seed");
  mc_cmd->add_option("--format", mc.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  mc_cmd->add_option("-o,--output", mc.output, "write to file");

  ModesumArgs modesum;
  CLI::App* modesum_cmd = app.add_subcommand(
      "modesum", "finite-volume quantum field mode sums on a periodic box");
  modesum_cmd->add_option("-D,--dimension", modesum.dimension,
                          "spacetime dimension D >= 2")
      ->required();
  modesum_cmd->add_option("--species", modesum.species, "scalar or photon");
  modesum_cmd->add_option("--tau", modesum.tau,
                          "temperature k_B T (energy units)");
  modesum_cmd->add_option("-L,--box", modesum.box, "box edge length")
      ->required();
  modesum_cmd->add_option("--nmax", modesum.n_max,
                          "mode cutoff (default: cutoff rule omega/tau >= 40)");
  modesum_cmd->add_option("--mass", modesum.mass, "field mass (scalar only)");
  modesum_cmd->add_option("--budget", modesum.budget, "mode count budget");
  modesum_cmd->add_option("--format", modesum.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  modesum_cmd->add_option("-o,--output", modesum.output, "write to file");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the cross-validation suite (checks A1-A10)");
  verify_cmd->add_option("--seed", verify.seed, "seed for the statistical checks");
  verify_cmd->add_option("--only", verify.only,
                         "run only the listed check ids (repeatable)");
  verify_cmd->add_option("--tolerance", verify.tolerances,
                         "override a base tolerance, e.g. closedform=1e-10");
  verify_cmd->add_option("-o,--output", verify.output, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (thermo_cmd->parsed()) return cmd_thermo(thermo);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (mc_cmd->parsed()) return cmd_mc_angle(mc);
    if (modesum_cmd->parsed()) return cmd_modesum(modesum);
    if (verify_cmd->parsed()) return cmd_verify(verify);
  } catch (const bbrad::modesum::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const bbrad::quadrature::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
