#include "naed/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "naed/gates.hpp"
#include "naed/rng.hpp"

namespace naed {

std::string bits_of_index(std::uint64_t index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (index & qubit_mask(n_qubits, q)) s[q] = '1';
  }
  return s;
}

std::uint64_t index_of_bits(const std::string& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ValidationError("bitstring contains a character other than 0/1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

StateVector init_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw CapacityError("n_qubits must be in [1, " +
                        std::to_string(kMaxQubits) + "], got " +
                        std::to_string(n_qubits));
  }
  StateVector state;
  state.n_qubits = n_qubits;
  state.amps = CVector::Zero(std::int64_t{1} << n_qubits);
  state.amps[0] = 1.0;
  return state;
}

namespace detail {

void apply_matrix_1q(StateVector& state, const Matrix2& m, int q) {
  if (q < 0 || q >= state.n_qubits) {
    throw ValidationError("qubit index " + std::to_string(q) +
                          " out of range for " +
                          std::to_string(state.n_qubits) + " qubits");
  }
  const std::uint64_t stride = qubit_mask(state.n_qubits, q);
  const std::uint64_t dim = state.dim();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  Complex* a = state.amps.data();
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const Complex a0 = a[i];
      const Complex a1 = a[i + stride];
      a[i] = m00 * a0 + m01 * a1;
      a[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

}  // namespace detail

void apply_1q(StateVector& state, const Matrix2& u, int q) {
  if (unitarity_defect(u) > 1e-10) {
    throw ValidationError("apply_1q requires a unitary matrix");
  }
  detail::apply_matrix_1q(state, u, q);
}

void apply_cx(StateVector& state, int control, int target) {
  if (control == target) {
    throw ValidationError("control and target must differ");
  }
  if (control < 0 || control >= state.n_qubits || target < 0 ||
      target >= state.n_qubits) {
    throw ValidationError("cx qubit index out of range");
  }
  const std::uint64_t cmask = qubit_mask(state.n_qubits, control);
  const std::uint64_t tmask = qubit_mask(state.n_qubits, target);
  const std::uint64_t dim = state.dim();
  Complex* a = state.amps.data();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(a[i], a[i | tmask]);
    }
  }
}

void apply_x(StateVector& state, int q) {
  if (q < 0 || q >= state.n_qubits) {
    throw ValidationError("x qubit index out of range");
  }
  const std::uint64_t mask = qubit_mask(state.n_qubits, q);
  const std::uint64_t dim = state.dim();
  Complex* a = state.amps.data();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (!(i & mask)) std::swap(a[i], a[i | mask]);
  }
}

RVector probabilities(const StateVector& state) {
  return state.amps.cwiseAbs2();
}

double norm_squared(const StateVector& state) {
  return state.amps.squaredNorm();
}

Counts sample(const StateVector& state, std::uint64_t shots,
              std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shots must be positive");

  SplitMix64 rng(seed);
  std::vector<double> draws(shots);
  for (auto& d : draws) d = rng.uniform();
  std::sort(draws.begin(), draws.end());

  // One cumulative sweep over the amplitudes; avoids a second dense array.
  Counts counts;
  const std::uint64_t dim = state.dim();
  const double norm = norm_squared(state);
  double cumulative = 0.0;
  std::size_t next = 0;
  for (std::uint64_t i = 0; i < dim && next < draws.size(); ++i) {
    cumulative += std::norm(state.amps[i]) / norm;
    std::uint64_t hits = 0;
    while (next < draws.size() && draws[next] < cumulative) {
      ++hits;
      ++next;
    }
    if (hits > 0) counts[bits_of_index(i, state.n_qubits)] += hits;
  }
  // Floating-point tail: any leftover draws land on the last basis state
  // with nonzero probability.
  if (next < draws.size()) {
    for (std::uint64_t i = dim; i-- > 0;) {
      if (std::norm(state.amps[i]) > 0.0) {
        counts[bits_of_index(i, state.n_qubits)] += draws.size() - next;
        break;
      }
    }
  }
  return counts;
}

}  // namespace naed
