#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "naed/types.hpp"

namespace naed {

// Qubit convention, fixed project-wide: physical qubit i is the i-th tensor
// factor from the left, so qubit i owns bit (n_qubits-1-i) of an amplitude
// index and basis-state strings are plain binary renderings of the index with
// qubit 0 as the leftmost character. The source text occasionally renders
// kets in value-binary order instead; this library always uses tensor order.

/// Dense state over n physical qubits; amplitudes indexed per the convention
/// above. Owned by exactly one simulation at a time.
struct StateVector {
  int n_qubits = 0;
  CVector amps;

  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
};

/// Measurement outcomes as a multiset: bitstring -> count.
using Counts = std::map<std::string, std::uint64_t>;

/// Index bit owned by qubit q in an n-qubit register.
inline std::uint64_t qubit_mask(int n_qubits, int q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

std::string bits_of_index(std::uint64_t index, int n_qubits);
std::uint64_t index_of_bits(const std::string& bits);

/// |00...0> on n_qubits qubits. Throws CapacityError outside [1, 25].
StateVector init_state(int n_qubits);

/// Applies a 2x2 unitary at tensor slot q, in place.
/// Throws ValidationError when U is not unitary to 1e-10, and
/// ValidationError when q is out of range.
void apply_1q(StateVector& state, const Matrix2& u, int q);

/// Controlled-not: flips the target bit of every basis state whose control
/// bit is set. Throws ValidationError when control == target or out of range.
void apply_cx(StateVector& state, int control, int target);

/// Pauli-X on qubit q (cheaper than apply_1q with the sigma_x matrix).
void apply_x(StateVector& state, int q);

/// |amplitude|^2 per basis index. Entries sum to 1 within 1e-10 for any
/// normalized input.
RVector probabilities(const StateVector& state);

double norm_squared(const StateVector& state);

/// Draws `shots` independent basis states from |amps|^2. Identical
/// (state, shots, seed) triples produce bit-identical counts.
/// Throws ValidationError when shots == 0.
Counts sample(const StateVector& state, std::uint64_t shots,
              std::uint64_t seed);

namespace detail {
/// Gate application without the unitarity check; used by noise channels
/// whose Kraus operators are deliberately non-unitary.
void apply_matrix_1q(StateVector& state, const Matrix2& m, int q);
}  // namespace detail

}  // namespace naed
