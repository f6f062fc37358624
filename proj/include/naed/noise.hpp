#pragma once

#include <cstdint>
#include <string>

#include "naed/circuit.hpp"
#include "naed/statevec.hpp"

namespace naed {

/// P(theta, phi) = e^{i phi} diag(1, e^{i theta}): the family of diagonal
/// single-qubit unitaries this detection scheme can never see.
Matrix2 phase_error(double theta, double phi);

enum class ErrorKind { X, Y, Z, Phase, Custom };

/// A deterministic single-gate error: inserted after gate `site` (site = -1
/// means before the first gate) on one physical qubit.
struct InjectionSpec {
  int site = -1;
  int qubit = 0;
  ErrorKind error = ErrorKind::X;
  double theta = 0.0;  // Phase only
  double phi = 0.0;    // Phase only
  Matrix2 custom = Matrix2::Identity();

  std::string to_json() const;  // Custom is programmatic-only, not serialized
};

/// Returns the circuit with one extra single-qubit gate at the requested
/// site. Y, Z, Phase and Custom errors are materialized as U3 gates; a
/// global phase (irrelevant to every measured distribution) is dropped.
/// Throws ValidationError for an out-of-range site or qubit.
PhysicalCircuit inject(const PhysicalCircuit& circuit,
                       const InjectionSpec& spec);

/// Stochastic per-gate noise: after each gate, each touched qubit suffers a
/// uniformly random Pauli from `paulis` with probability p_gate; then every
/// qubit (idle ones included) takes one amplitude-damping trajectory step
/// with jump probability gamma * P(qubit = 1).
struct StochasticModel {
  double p_gate = 0.0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::string paulis = "XYZ";  // subset of XYZ; restricts the Pauli choices

  std::string to_json() const;
};

/// Samples `shots` independent quantum trajectories of the circuit under the
/// model and measures each once. Bit-identical output is guaranteed for
/// identical (circuit, model, shots, seed): shot k draws from a stream
/// derived from (model.seed, seed, k). With p_gate = 0 and gamma = 0 this is
/// exactly sample(simulate(circuit), shots, seed).
///
/// Trajectories run on a sparse amplitude map that switches to a dense
/// vector if the support grows past a threshold; circuits with few U3 gates
/// (the GHZ family has one) keep constant-size states, which is what makes
/// large seeded sweeps affordable.
Counts simulate_noisy(const PhysicalCircuit& circuit,
                      const StochasticModel& model, std::uint64_t shots,
                      std::uint64_t seed);

}  // namespace naed
