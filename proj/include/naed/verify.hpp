#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "naed/circuit.hpp"
#include "naed/code.hpp"

namespace naed {

// Brute-force oracle. Everything here builds full 2^n x 2^n matrices by
// naive tensor products and multiplies them in time order, independently of
// the stride-iteration engine it cross-checks.

/// kron(a, b) with a's index as the most significant block.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// I_{2^q} (x) m (x) I_{2^{n-q-1}}: a one-qubit matrix at tensor slot q.
CMatrix embed_1q(const Matrix2& m, int q, int n_qubits);

/// The 2^n x 2^n controlled-not permutation matrix.
CMatrix cx_matrix(int control, int target, int n_qubits);

/// Dense unitary of a circuit (product of per-gate matrices in time order).
/// Throws CapacityError for more than 12 qubits.
CMatrix unitary_of(const PhysicalCircuit& circuit);

/// Encoding matrix M_S: the product of sigma_x embeddings over S.
CMatrix encoding_matrix(const BitFlipCode& code);

/// Basis column e_b for the codeword of |0>_L or |1>_L.
CVector codeword_ket(const BitFlipCode& code, bool one);

/// Max-norm distance after global-phase alignment (each vector is divided by
/// the phase of its largest-magnitude component).
double phase_aligned_distance(const CVector& a, const CVector& b);

/// Numerically checks the four algebraic identities the logical-gate proofs
/// rest on: CX/X commutation, X-conjugation, and the M_S action on
/// alpha|00...0> + beta|11...1> and its inverse, over random amplitudes.
/// Returns the max residual (expected <= 1e-12). Q <= 6.
double check_identities(int q, const std::set<int>& s,
                        std::uint64_t seed = 0x5eed01);

/// Verifies the logical-U3 theorem for `samples` random (theta, phi, lambda,
/// alpha, beta): the dense unitary of logical_u3 must map alpha|x> + beta|y>
/// to tau|x> + delta|y> where (tau, delta) = U3 (alpha, beta). Also checks
/// the production angle-remapped form against the literal X-sandwich
/// construction for the 0-in-S case. Returns max deviation. Q <= 5.
double check_logical_u3(int q, const std::set<int>& s, int samples,
                        std::uint64_t seed = 0x5eed02);

/// Verifies the logical-CX theorem on random 4-amplitude logical states
/// (the |10>_L / |11>_L components swap) and the equivalent sandwiched form
/// (M (x) M) L_empty(CX) (M (x) M). Returns max deviation. 2Q <= 12.
double check_logical_cx(int q, const std::set<int>& s, int samples,
                        std::uint64_t seed = 0x5eed03);

/// Sweeps a grid of 2x2 unitaries (Euler angles in steps of pi/8) applied to
/// one qubit of an encoded state and confirms that the invalid-block mass is
/// zero exactly when the error matrix is diagonal. Returns true when the
/// characterization holds for every grid point.
bool check_detectable_errors(int q, const std::set<int>& s,
                             std::uint64_t seed = 0x5eed04);

/// Uniformly random circuit over U3/CX/X gates, for cross-checks.
PhysicalCircuit random_circuit(int n_qubits, int n_gates, std::uint64_t seed);

/// Up to `want` distinct subsets of {0..Q-1}: all of them when 2^Q <= want,
/// otherwise the structural corners plus pseudorandom fill.
std::vector<std::set<int>> codeword_sets(int q, int want, std::uint64_t seed);

/// Runs `count` random circuits through both the stride-iteration engine and
/// the dense oracle; returns the max phase-aligned state deviation.
double check_engine_vs_oracle(int count, int max_qubits, int max_gates,
                              std::uint64_t seed = 0x5eed05);

struct VerifyReport {
  struct Line {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
  };
  std::vector<Line> lines;
  bool all_pass = true;
};

/// Runs the full verification battery (identities, both logical-gate
/// theorems, engine-vs-oracle, detectable-error sweep).
VerifyReport run_verification();

}  // namespace naed
