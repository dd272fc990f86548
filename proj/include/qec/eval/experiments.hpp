// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/dense_sim.hpp"
#include "qec/ecc/passes.hpp"
#include "qec/errors.hpp"
#include "qec/eval/metrics.hpp"
#include "qec/noise.hpp"
#include "qec/outcome.hpp"
#include "qec/stabilizer_sim.hpp"

namespace qec {

/// Tabular result of a parameter sweep. `rows` holds one entry per swept
/// value in column order; a missing cell (e.g. an engine skipped because the
/// size exceeds its cap) stays empty. Shots, base seed and per-row wall
/// times are carried alongside so a result is reproducible from the object
/// alone; the CSV output contains only the pinned columns.
struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<double> wall_seconds;
};

/// Shortest decimal form of `v` that parses back to exactly the same double.
/// Integral values print without an exponent so grid columns stay readable.
inline std::string format_double(double v) {
  char buf[40];
  if (v == static_cast<std::int64_t>(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string to_csv(const SweepResult& result) {
  if (result.rows.empty())
    throw Error("cannot serialize an empty sweep result");
  std::string out;
  for (std::size_t c = 0; c < result.columns.size(); ++c) {
    if (c) out += ',';
    out += result.columns[c];
  }
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_double(*row[c]);
    }
    out += '\n';
  }
  return out;
}

inline void emit_csv(const SweepResult& result, const std::string& path) {
  const std::string text = to_csv(result);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw Error("failed while writing '" + path + "'");
}

/// Parses CSV text produced by to_csv back into columns and rows. Empty
/// cells become empty optionals; malformed numbers raise ParseError.
inline SweepResult parse_csv(const std::string& text) {
  SweepResult result;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (line_no == 1) {
      result.columns = cells;
      continue;
    }
    std::vector<std::optional<double>> row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        row.push_back(std::nullopt);
        continue;
      }
      char* end = nullptr;
      const double v = std::strtod(cells[c].c_str(), &end);
      if (end != cells[c].c_str() + cells[c].size())
        throw ParseError(line_no, c + 1, "malformed number '" + cells[c] + "'");
      row.push_back(v);
    }
    result.rows.push_back(std::move(row));
  }
  if (result.columns.empty()) throw ParseError(1, 1, "missing CSV header");
  return result;
}

inline Circuit make_benchmark(const std::string& name, std::uint32_t size) {
  if (name == "ghz") return ghz_benchmark(size);
  throw std::invalid_argument("unknown benchmark '" + name +
                              "' (available: ghz)");
}

/// Dispatches to one of the three engines by name. "dense-exact" ignores
/// `shots` (the density result is analytic).
inline OutcomeDistribution simulate_backend(const std::string& backend,
                                            const Circuit& circuit,
                                            const std::optional<NoiseModel>& noise,
                                            std::uint64_t shots,
                                            const SimLimits& limits = {}) {
  if (backend == "dense-exact") return run_density(circuit, noise, limits);
  if (backend == "trajectories")
    return run_trajectories(circuit, noise, shots, limits);
  if (backend == "stabilizer") return run_stabilizer(circuit, noise, shots);
  throw std::invalid_argument(
      "unknown backend '" + backend +
      "' (available: dense-exact, trajectories, stabilizer)");
}

/// Noiseless reference distribution ("what would be received when no errors
/// occur"): analytic while the circuit fits the pure-state engine, sampled
/// on the stabilizer engine beyond that.
inline OutcomeDistribution ideal_reference(const Circuit& circuit,
                                           std::uint64_t shots) {
  const SimLimits limits;
  if (circuit.num_qubits <= limits.statevector_max_qubits)
    return run_exact_pure(circuit);
  return run_stabilizer(circuit, std::nullopt, shots);
}

/// One §V-style experiment: a benchmark circuit padded with dummy
/// operations, optionally compiled under an error-correcting code, simulated
/// under noise on a chosen backend, and scored with the Hellinger
/// coefficient against the noiseless reference. Exactly one parameter is
/// swept.
struct ExperimentSpec {
  std::string benchmark = "ghz";
  std::uint32_t size = 5;
  std::optional<EccConfig> ecc;
  NoiseModel noise;
  std::string backend = "stabilizer";
  std::uint64_t shots = 2000;
  std::uint64_t dummy_ops = 0;
  std::string parameter;
  std::vector<double> values;
};

namespace detail {

inline double seconds_since(
    std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

inline void check_backend_noise(const std::string& backend,
                                const std::optional<NoiseModel>& noise) {
  if (backend == "stabilizer") {
    const Circuit probe(1, 0);
    if (const std::string why = stabilizer_incompatibility(probe, noise);
        !why.empty())
      throw UnsupportedGateError(why);
  }
}

} // namespace detail

inline SweepResult run_sweep(const ExperimentSpec& spec) {
  static const std::array<std::string, 4> kParameters = {
      "dummy_ops", "correction_frequency", "noise_p", "qubits"};
  if (std::find(kParameters.begin(), kParameters.end(), spec.parameter) ==
      kParameters.end())
    throw std::invalid_argument(
        "unknown sweep parameter '" + spec.parameter +
        "' (available: dummy_ops, correction_frequency, noise_p, qubits)");
  if (spec.values.empty())
    throw std::invalid_argument("sweep needs at least one value");
  if (spec.parameter == "correction_frequency" && !spec.ecc)
    throw std::invalid_argument(
        "sweeping correction_frequency requires an ECC configuration");
  detail::check_backend_noise(spec.backend, spec.noise);

  SweepResult result;
  result.columns = spec.ecc
                       ? std::vector<std::string>{spec.parameter,
                                                  "withProtection", "noecc"}
                       : std::vector<std::string>{spec.parameter, "fidelity"};
  result.shots = spec.shots;
  result.seed = spec.noise.seed;

  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const double value = spec.values[i];
    const auto start = std::chrono::steady_clock::now();

    std::uint32_t size = spec.size;
    std::uint64_t dummies = spec.dummy_ops;
    EccConfig ecc = spec.ecc.value_or(EccConfig{});
    NoiseModel noise = spec.noise;
    noise.seed = spec.noise.seed + i;
    if (spec.parameter == "dummy_ops")
      dummies = static_cast<std::uint64_t>(value);
    else if (spec.parameter == "correction_frequency")
      ecc.correction_frequency = static_cast<std::uint64_t>(value);
    else if (spec.parameter == "noise_p")
      noise.channel.p = value;
    else
      size = static_cast<std::uint32_t>(value);

    const Circuit base =
        pad_dummy_ops(make_benchmark(spec.benchmark, size), dummies);
    const OutcomeDistribution reference = ideal_reference(base, spec.shots);

    std::vector<std::optional<double>> row{value};
    if (spec.ecc) {
      const EncodedCircuit encoded = apply_ecc(base, ecc);
      const OutcomeDistribution with_ecc =
          simulate_backend(spec.backend, encoded.circuit, noise, spec.shots)
              .marginal(base.num_clbits);
      row.push_back(hellinger_coefficient(with_ecc, reference));
    }
    const OutcomeDistribution bare =
        simulate_backend(spec.backend, base, noise, spec.shots);
    row.push_back(hellinger_coefficient(bare, reference));

    result.rows.push_back(std::move(row));
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

/// Fidelity of the |0> state under bit-flip noise, three ways: a bare qubit,
/// the three-qubit repetition code with noiseless correction circuitry, and
/// the same code with noise on every operation. The state fidelity equals
/// the probability of reading the ideal outcome, estimated from `shots`
/// samples per point.
inline SweepResult fig3_study(
    const std::vector<double>& p_grid = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30,
                                         0.35, 0.40, 0.45, 0.50},
    std::uint64_t shots = 2000, std::uint64_t seed = 1) {
  SweepResult result;
  result.columns = {"ErrorProb", "NoECC", "BitflipIdeal", "BitflipRealistic"};
  result.shots = shots;
  result.seed = seed;

  Circuit base(1, 1);
  base.i(0).measure(0, 0);
  const EccConfig config{"bitflip3", 500, true};
  const Circuit ideal = apply_ecc(base, config, true).circuit;
  const Circuit realistic = apply_ecc(base, config, false).circuit;

  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    NoiseModel noise;
    noise.channel = NoiseChannel{ChannelKind::BitFlip, p_grid[i]};
    noise.seed = seed + i;
    noise.apply_to_measurement = false;

    const double bare = run_trajectories(base, noise, shots).prob("0");
    const double with_ideal =
        run_trajectories(ideal, noise, shots).marginal(1).prob("0");
    const double with_realistic =
        run_trajectories(realistic, noise, shots).marginal(1).prob("0");
    result.rows.push_back({p_grid[i], bare, with_ideal, with_realistic});
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

/// Wall-time comparison of the three engines on noisy GHZ preparation.
/// Cells stay empty where a circuit exceeds an engine's capacity; sampled
/// engines use `shots` samples and every timing is the median of three
/// repetitions.
inline SweepResult fig5_study(
    const std::vector<std::uint32_t>& n_grid = {2, 4, 6, 8, 10, 12, 16, 30,
                                                50, 100, 200},
    std::uint64_t shots = 2000, std::uint64_t seed = 1) {
  SweepResult result;
  result.columns = {"qubit", "density", "stoch", "stab"};
  result.shots = shots;
  result.seed = seed;
  const SimLimits limits;

  auto median3 = [](auto&& run) {
    std::array<double, 3> t{};
    for (double& x : t) {
      const auto start = std::chrono::steady_clock::now();
      run();
      x = detail::seconds_since(start);
    }
    std::sort(t.begin(), t.end());
    return t[1];
  };

  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Circuit c = ghz_benchmark(n_grid[i]);
    NoiseModel noise;
    noise.channel = NoiseChannel{ChannelKind::Depolarizing, 1e-5};
    noise.seed = seed + i;

    std::vector<std::optional<double>> row{static_cast<double>(n_grid[i])};
    if (c.num_qubits <= limits.density_max_qubits)
      row.push_back(median3([&] { run_density(c, noise); }));
    else
      row.push_back(std::nullopt);
    if (c.num_qubits <= limits.statevector_max_qubits)
      row.push_back(median3([&] { run_trajectories(c, noise, shots); }));
    else
      row.push_back(std::nullopt);
    row.push_back(median3([&] { run_stabilizer(c, noise, shots); }));

    result.rows.push_back(std::move(row));
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

/// Fidelity against circuit depth: GHZ-5 padded with a growing number of
/// dummy operations, bare versus protected by steane7 at the default
/// correction frequency, under depolarizing noise of strength 1e-5.
inline SweepResult fig6a_study(
    const std::vector<std::uint64_t>& depth_grid = {0, 4000, 8000, 12000,
                                                    16000, 20000},
    std::uint64_t shots = 2000, std::uint64_t seed = 2) {
  SweepResult result;
  result.columns = {"depth", "noProtection", "withProtection"};
  result.shots = shots;
  result.seed = seed;
  const EccConfig config{"steane7", 500, true};

  for (std::size_t i = 0; i < depth_grid.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Circuit base = pad_dummy_ops(ghz_benchmark(5), depth_grid[i]);
    const OutcomeDistribution reference = run_exact_pure(base);
    NoiseModel noise;
    noise.channel = NoiseChannel{ChannelKind::Depolarizing, 1e-5};
    noise.seed = seed + i;

    const double bare = hellinger_coefficient(
        run_stabilizer(base, noise, shots), reference);
    const EncodedCircuit encoded = apply_ecc(base, config);
    const double protected_fid = hellinger_coefficient(
        run_stabilizer(encoded.circuit, noise, shots).marginal(5), reference);

    result.rows.push_back(
        {static_cast<double>(depth_grid[i]), bare, protected_fid});
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

/// Fidelity against correction frequency at fixed depth: GHZ-5 with 10000
/// dummy operations under steane7. The unprotected reference column does not
/// depend on the frequency and is computed once. Noise is pinned at 5e-5,
/// strong enough that both over-correcting (rounds dominate the error
/// budget) and under-correcting (idle errors accumulate past distance) sit
/// clearly below the interior optimum.
inline SweepResult fig6b_study(
    const std::vector<std::uint64_t>& frequency_grid = {10, 50, 100, 250, 500,
                                                        1000, 2500, 5000,
                                                        10000},
    std::uint64_t shots = 2000, std::uint64_t seed = 3,
    std::uint64_t dummy_ops = 10000) {
  SweepResult result;
  result.columns = {"fq", "withProtection", "noecc"};
  result.shots = shots;
  result.seed = seed;

  const Circuit base = pad_dummy_ops(ghz_benchmark(5), dummy_ops);
  const OutcomeDistribution reference = run_exact_pure(base);
  NoiseModel base_noise;
  base_noise.channel = NoiseChannel{ChannelKind::Depolarizing, 5e-5};
  base_noise.seed = seed;
  const double bare = hellinger_coefficient(
      run_stabilizer(base, base_noise, shots), reference);

  for (std::size_t i = 0; i < frequency_grid.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    NoiseModel noise = base_noise;
    noise.seed = seed + i;
    const EccConfig config{"steane7", frequency_grid[i], true};
    const EncodedCircuit encoded = apply_ecc(base, config);
    const double protected_fid = hellinger_coefficient(
        run_stabilizer(encoded.circuit, noise, shots).marginal(5), reference);
    result.rows.push_back(
        {static_cast<double>(frequency_grid[i]), protected_fid, bare});
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

/// Fidelity against physical error probability for two hardware models:
/// amplitude damping (trajectory engine, columns SteaneQ/Q) and
/// depolarizing (stabilizer engine, columns SteaneD/D), each bare and under
/// steane7. The damping parameter is calibrated as gamma = 2p so that both
/// channels inflict the same state-averaged error probability p per use
/// (a damping jump only fires on the excited component, which carries half
/// the population on average). GHZ-2 padded with dummy operations keeps the
/// trajectory runs affordable while leaving the crossover visible.
inline SweepResult fig6c_study(
    const std::vector<double>& p_grid = {1e-4, 3e-4, 5.5e-4, 1e-3},
    std::uint64_t shots = 2000, std::uint64_t seed = 4,
    std::uint64_t dummy_ops = 1200, std::uint64_t frequency = 350) {
  SweepResult result;
  result.columns = {"error", "SteaneQ", "Q", "SteaneD", "D"};
  result.shots = shots;
  result.seed = seed;

  const Circuit base = pad_dummy_ops(ghz_benchmark(2), dummy_ops);
  const OutcomeDistribution reference = run_exact_pure(base);
  const EccConfig config{"steane7", frequency, true};
  const EncodedCircuit encoded = apply_ecc(base, config);

  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    NoiseModel damping;
    damping.channel =
        NoiseChannel{ChannelKind::AmplitudeDamping, 2.0 * p_grid[i]};
    damping.seed = seed + i;
    NoiseModel depolarizing;
    depolarizing.channel = NoiseChannel{ChannelKind::Depolarizing, p_grid[i]};
    depolarizing.seed = seed + i;

    const double steane_q = hellinger_coefficient(
        run_trajectories(encoded.circuit, damping, shots).marginal(2),
        reference);
    const double q = hellinger_coefficient(
        run_trajectories(base, damping, shots), reference);
    const double steane_d = hellinger_coefficient(
        run_stabilizer(encoded.circuit, depolarizing, shots).marginal(2),
        reference);
    const double d = hellinger_coefficient(
        run_stabilizer(base, depolarizing, shots), reference);

    result.rows.push_back({p_grid[i], steane_q, q, steane_d, d});
    result.wall_seconds.push_back(detail::seconds_since(start));
  }
  return result;
}

} // namespace qec
