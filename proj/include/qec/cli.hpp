// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qec/circuit.hpp"
#include "qec/circuit_io.hpp"
#include "qec/ecc/catalog.hpp"
#include "qec/ecc/passes.hpp"
#include "qec/errors.hpp"
#include "qec/eval/experiments.hpp"
#include "qec/eval/metrics.hpp"
#include "qec/noise.hpp"

namespace qec {

/// Exit codes shared by every subcommand: 0 success, 1 I/O failure,
/// 2 bad input (parse or usage), 3 operation unsupported by the selected
/// code or backend.
enum CliExit : int {
  kCliOk = 0,
  kCliIoError = 1,
  kCliBadInput = 2,
  kCliUnsupported = 3,
};

namespace detail {

/// Tags an I/O-layer failure so the top-level handler can map it to exit
/// code 1 while other qec::Error instances keep exit code 2.
struct IoFailure {
  std::string message;
};

template <typename F> auto io_guard(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw IoFailure{e.what()};
  }
}

inline NoiseChannel channel_from_name(const std::string& name, double p) {
  static const std::map<std::string, ChannelKind> kinds = {
      {"bitflip", ChannelKind::BitFlip},
      {"phaseflip", ChannelKind::PhaseFlip},
      {"depolarizing", ChannelKind::Depolarizing},
      {"damping", ChannelKind::AmplitudeDamping},
  };
  auto it = kinds.find(name);
  if (it == kinds.end())
    throw std::invalid_argument(
        "unknown noise kind '" + name +
        "' (available: none, bitflip, phaseflip, depolarizing, damping)");
  return NoiseChannel{it->second, p};
}

inline std::string join_gate_names(const std::vector<GateKind>& kinds) {
  std::string out;
  for (GateKind g : kinds) {
    if (!out.empty()) out += ',';
    out += name_of(g);
  }
  return out;
}

inline void print_distribution(std::ostream& out,
                               const OutcomeDistribution& dist) {
  for (const auto& [key, p] : dist.probabilities)
    out << key << ' ' << format_double(p) << '\n';
}

} // namespace detail

/// Runs the command-line interface on `args` (program name excluded).
/// Machine-readable payloads go to `out`; diagnostics, including the
/// resolved seed of every stochastic run, go to `err`. Returns a CliExit
/// value.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Error-correcting-code compiler and noisy circuit simulator"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  std::string code = "steane7";
  std::uint64_t frequency = 500;
  std::string backend = "trajectories";
  std::string noise_kind = "depolarizing";
  double noise_p = 1e-5;
  std::uint64_t shots = 2000;
  std::uint64_t dummy_ops = 10000;
  std::uint64_t ghz_size = 0;
  std::uint64_t seed = 0;
  bool with_fidelity = false;
  std::string sweep_name;
  std::string parameter;
  std::vector<double> values;
  std::uint32_t bench_size = 5;

  CLI::App* apply = app.add_subcommand(
      "apply-ecc", "Compile a circuit onto an error-correcting code");
  apply->add_option("--in", in_path, "input circuit file")->required();
  apply->add_option("--out", out_path, "output circuit file")->required();
  apply->add_option("--code", code, "code name (see list-codes)")
      ->capture_default_str();
  apply->add_option("--frequency", frequency,
                    "logical uses between correction rounds")
      ->capture_default_str();

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a circuit under a noise model");
  simulate->add_option("--in", in_path, "input circuit file");
  simulate->add_option("--ghz", ghz_size, "simulate a GHZ benchmark instead");
  simulate->add_option("--backend", backend,
                       "dense-exact, trajectories, or stabilizer")
      ->capture_default_str();
  simulate->add_option("--noise", noise_kind,
                       "none, bitflip, phaseflip, depolarizing, or damping")
      ->capture_default_str();
  simulate->add_option("--p", noise_p, "noise strength per use")
      ->capture_default_str();
  simulate->add_option("--shots", shots, "samples for sampling backends")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "noise/sampling seed")
      ->envname("QEC_SEED");
  simulate->add_flag("--fidelity", with_fidelity,
                     "append the fidelity against the noiseless reference");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run an experiment sweep and write its CSV");
  sweep->add_option("name", sweep_name,
                    "fig3, fig5, fig6a, fig6b, fig6c, or custom")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--shots", shots, "samples per point")
      ->capture_default_str();
  CLI::Option* sweep_seed =
      sweep->add_option("--seed", seed, "base seed (row i adds i)")
          ->envname("QEC_SEED");
  CLI::Option* opt_parameter = sweep->add_option(
      "--parameter", parameter,
      "custom only: dummy_ops, correction_frequency, noise_p, or qubits");
  CLI::Option* opt_values =
      sweep->add_option("--values", values, "custom only: swept values")
          ->delimiter(',');
  CLI::Option* opt_code =
      sweep->add_option("--code", code, "custom only: protect with this code");
  sweep->add_option("--frequency", frequency,
                    "custom only: correction frequency")
      ->capture_default_str();
  std::string bench_name = "ghz";
  sweep->add_option("--benchmark", bench_name, "custom only: benchmark family")
      ->capture_default_str();
  sweep->add_option("--size", bench_size, "custom only: benchmark size")
      ->capture_default_str();
  sweep->add_option("--backend", backend, "custom only: simulation backend")
      ->capture_default_str();
  sweep->add_option("--noise", noise_kind, "custom only: noise kind")
      ->capture_default_str();
  sweep->add_option("--p", noise_p, "custom only: noise strength")
      ->capture_default_str();
  sweep->add_option("--dummy-ops", dummy_ops, "custom only: padding depth")
      ->capture_default_str();

  CLI::App* list =
      app.add_subcommand("list-codes", "Describe the available codes");

  try {
    std::vector<const char*> argv{"qec"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kCliBadInput;
  }

  try {
    if (app.got_subcommand(apply)) {
      const EccScheme scheme = make_scheme(code);
      const Circuit input =
          detail::io_guard([&] { return load_circuit(in_path); });
      const EccConfig config{code, frequency, true};
      const EncodedCircuit encoded = apply_ecc(input, scheme, config);
      detail::io_guard([&] { save_circuit(encoded.circuit, out_path); });
      err << "encoded '" << in_path << "' with " << code << ": "
          << input.num_qubits << " -> " << encoded.circuit.num_qubits
          << " qubits, " << input.num_clbits << " -> "
          << encoded.circuit.num_clbits << " clbits\n";
      return kCliOk;
    }

    if (app.got_subcommand(simulate)) {
      if (in_path.empty() == (ghz_size == 0))
        throw std::invalid_argument(
            "provide exactly one of --in or --ghz");
      const Circuit circuit =
          in_path.empty()
              ? ghz_benchmark(static_cast<std::uint32_t>(ghz_size))
              : detail::io_guard([&] { return load_circuit(in_path); });

      std::optional<NoiseModel> noise;
      if (noise_kind != "none") {
        NoiseModel model;
        model.channel = detail::channel_from_name(noise_kind, noise_p);
        model.seed = seed;
        noise = model;
      }
      err << "seed: " << seed << '\n';

      const OutcomeDistribution dist =
          simulate_backend(backend, circuit, noise, shots);
      detail::print_distribution(out, dist);
      if (with_fidelity) {
        const OutcomeDistribution reference = ideal_reference(circuit, shots);
        out << "fidelity " << format_double(hellinger_coefficient(
                                  dist, reference))
            << '\n';
      }
      return kCliOk;
    }

    if (app.got_subcommand(sweep)) {
      static const std::map<std::string, std::uint64_t> kStudySeeds = {
          {"fig3", 1}, {"fig5", 1}, {"fig6a", 2}, {"fig6b", 3}, {"fig6c", 4}};
      const bool custom = sweep_name == "custom";
      if (!custom && kStudySeeds.find(sweep_name) == kStudySeeds.end())
        throw std::invalid_argument(
            "unknown sweep '" + sweep_name +
            "' (available: fig3, fig5, fig6a, fig6b, fig6c, custom)");
      if (!custom && (opt_parameter->count() || opt_values->count() ||
                      opt_code->count()))
        throw std::invalid_argument(
            "--parameter/--values/--code apply only to the custom sweep");

      SweepResult result;
      if (custom) {
        ExperimentSpec spec;
        spec.benchmark = bench_name;
        spec.size = bench_size;
        spec.backend = backend;
        spec.shots = shots;
        spec.dummy_ops = dummy_ops;
        spec.parameter = parameter;
        spec.values = values;
        if (opt_code->count()) spec.ecc = EccConfig{code, frequency, true};
        spec.noise.channel = detail::channel_from_name(noise_kind, noise_p);
        spec.noise.seed = seed;
        err << "seed: " << seed << '\n';
        err << "running custom sweep (" << values.size() << " points)\n";
        result = run_sweep(spec);
      } else {
        if (sweep_seed->count() == 0) seed = kStudySeeds.at(sweep_name);
        err << "seed: " << seed << '\n';
        err << "running " << sweep_name << " (" << shots << " shots)\n";
        if (sweep_name == "fig3")
          result = fig3_study({0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35,
                               0.40, 0.45, 0.50},
                              shots, seed);
        else if (sweep_name == "fig5")
          result = fig5_study({2, 4, 6, 8, 10, 12, 16, 30, 50, 100, 200},
                              shots, seed);
        else if (sweep_name == "fig6a")
          result = fig6a_study({0, 4000, 8000, 12000, 16000, 20000}, shots,
                               seed);
        else if (sweep_name == "fig6b")
          result = fig6b_study({10, 50, 100, 250, 500, 1000, 2500, 5000,
                                10000},
                               shots, seed);
        else
          result = fig6c_study({1e-4, 3e-4, 5.5e-4, 1e-3}, shots, seed);
      }
      detail::io_guard([&] { emit_csv(result, out_path); });
      double total = 0.0;
      for (double t : result.wall_seconds) total += t;
      err << "wrote " << out_path << " (" << result.rows.size() << " rows, "
          << static_cast<long>(total + 0.5) << " s)\n";
      return kCliOk;
    }

    if (app.got_subcommand(list)) {
      for (const std::string& name : list_codes()) {
        const EccScheme scheme = make_scheme(name);
        out << scheme.name << " n_physical=" << scheme.code_qubits
            << " n_ancilla=" << scheme.ancilla_qubits
            << " distance=" << scheme.distance
            << " supported=" << detail::join_gate_names(scheme.supported)
            << '\n';
      }
      return kCliOk;
    }
  } catch (const detail::IoFailure& e) {
    err << "error: " << e.message << '\n';
    return kCliIoError;
  } catch (const UnsupportedGateError& e) {
    err << "error: " << e.what() << '\n';
    return kCliUnsupported;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCliUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCliBadInput;
  }
  return kCliBadInput;
}

} // namespace qec
