#include "naed/statevec.hpp"

#include <doctest.h>

#include <cmath>

#include "naed/gates.hpp"
#include "naed/rng.hpp"
#include "naed/verify.hpp"
#include "helpers.hpp"

using namespace naed;
using naed::test::basis;
using naed::test::max_diff;

TEST_CASE("init_state puts all amplitude on |00...0>") {
  const StateVector one = init_state(1);
  CHECK(one.amps.size() == 2);
  CHECK(one.amps[0] == Complex(1.0, 0.0));
  CHECK(one.amps[1] == Complex(0.0, 0.0));

  const StateVector two = init_state(2);
  CHECK(two.amps.size() == 4);
  CHECK(max_diff(two.amps, basis(2, "00")) == 0.0);

  const StateVector four = init_state(4);
  CHECK(max_diff(four.amps, basis(4, "0000")) == 0.0);

  CHECK_THROWS_AS(init_state(0), CapacityError);
  CHECK_THROWS_AS(init_state(26), CapacityError);
}

TEST_CASE("apply_1q sigma_x on qubit 0 flips the leftmost string position") {
  StateVector state = init_state(3);
  apply_1q(state, pauli_x(), 0);
  CHECK(max_diff(state.amps, basis(3, "100")) == 0.0);
}

TEST_CASE("apply_1q identity leaves any state untouched") {
  StateVector state = init_state(2);
  apply_1q(state, hadamard(), 0);
  apply_1q(state, hadamard(), 1);
  const CVector before = state.amps;
  apply_1q(state, identity2(), 0);
  apply_1q(state, identity2(), 1);
  CHECK(max_diff(state.amps, before) == 0.0);
}

TEST_CASE("apply_1q Hadamard matches the dense 4x4 oracle") {
  // Independent route: (H (x) I) e0 computed with naive tensor products.
  const CVector expected = embed_1q(hadamard(), 0, 2) * basis(2, "00");
  CHECK(std::abs(expected[index_of_bits("00")] - Complex(M_SQRT1_2, 0)) <
        1e-15);
  CHECK(std::abs(expected[index_of_bits("10")] - Complex(M_SQRT1_2, 0)) <
        1e-15);

  StateVector state = init_state(2);
  apply_1q(state, hadamard(), 0);
  CHECK(max_diff(state.amps, expected) < 1e-15);
}

TEST_CASE("apply_1q rejects non-unitary input and bad indices") {
  StateVector state = init_state(2);
  Matrix2 bad;
  bad << 1, 0, 0, 0.5;
  CHECK_THROWS_AS(apply_1q(state, bad, 0), ValidationError);
  CHECK_THROWS_AS(apply_1q(state, identity2(), 2), ValidationError);
  CHECK_THROWS_AS(apply_1q(state, identity2(), -1), ValidationError);
}

TEST_CASE("apply_cx basis action") {
  // |011>: control q1 is set, so q2 flips; frozen from the I2 (x) CX oracle.
  StateVector state = init_state(3);
  state.amps = basis(3, "011");
  apply_cx(state, 1, 2);
  const CVector expected = cx_matrix(1, 2, 3) * basis(3, "011");
  CHECK(max_diff(state.amps, expected) == 0.0);
  CHECK(max_diff(state.amps, basis(3, "010")) == 0.0);

  // Control clear: nothing happens.
  StateVector clear = init_state(2);
  apply_cx(clear, 0, 1);
  CHECK(max_diff(clear.amps, basis(2, "00")) == 0.0);

  CHECK_THROWS_AS(apply_cx(clear, 1, 1), ValidationError);
}

TEST_CASE("apply_cx is self-inverse on random states") {
  SplitMix64 rng(7);
  StateVector state = init_state(2);
  for (int i = 0; i < 4; ++i) {
    state.amps[i] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  state.amps.normalize();
  const CVector before = state.amps;
  apply_cx(state, 0, 1);
  apply_cx(state, 0, 1);
  CHECK(max_diff(state.amps, before) == 0.0);
}

TEST_CASE("probabilities") {
  StateVector state = init_state(4);
  state.amps = basis(4, "0101");
  const RVector p = probabilities(state);
  CHECK(p[index_of_bits("0101")] == 1.0);
  CHECK(p.sum() == 1.0);

  StateVector ghz = init_state(4);
  ghz.amps = (basis(4, "0101") + basis(4, "1010")) / M_SQRT2;
  const RVector pg = probabilities(ghz);
  CHECK(pg[index_of_bits("0101")] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pg[index_of_bits("1010")] == doctest::Approx(0.5).epsilon(1e-12));

  // A relative phase of i is invisible in the distribution.
  StateVector phased = init_state(2);
  phased.amps = (basis(2, "00") + Complex(0, 1) * basis(2, "11")) / M_SQRT2;
  const RVector pp = probabilities(phased);
  CHECK(pp[index_of_bits("00")] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pp[index_of_bits("11")] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sample determinism and support") {
  StateVector point = init_state(3);
  point.amps = basis(3, "101");
  const Counts counts = sample(point, 8192, 42);
  CHECK(counts.size() == 1);
  CHECK(counts.at("101") == 8192);

  StateVector ghz = init_state(2);
  ghz.amps = (basis(2, "00") + basis(2, "11")) / M_SQRT2;
  const Counts a = sample(ghz, 8192, 1);
  const Counts b = sample(ghz, 8192, 1);
  CHECK(a == b);
  for (const auto& [bits, n] : a) {
    CHECK((bits == "00" || bits == "11"));
  }
  CHECK(naed::test::total_shots(a) == 8192);

  CHECK_THROWS_AS(sample(ghz, 0, 1), ValidationError);
}

TEST_CASE("sampling law: frequencies within 5 sigma at 2^13 shots") {
  StateVector state = init_state(2);
  apply_1q(state, hadamard(), 0);
  apply_1q(state, u3_matrix(1.1, 0.3, 2.2), 1);
  const RVector p = probabilities(state);
  const std::uint64_t shots = 8192;
  const Counts counts = sample(state, shots, 97);
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    const double expect = p[b];
    const double sigma = std::sqrt(expect * (1 - expect) / shots);
    const auto it = counts.find(bits_of_index(b, 2));
    const double freq =
        it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
    CHECK(std::abs(freq - expect) <= 5 * sigma + 1e-12);
  }
}

TEST_CASE("norm preserved across random gate sequences") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const PhysicalCircuit pc =
        random_circuit(1 + static_cast<int>(rng.below(5)), 30, rng.next());
    const StateVector state = simulate(pc);
    CHECK(std::abs(norm_squared(state) - 1.0) < 1e-10);
  }
}

TEST_CASE("engine matches the dense kron-product oracle up to 5 qubits") {
  CHECK(check_engine_vs_oracle(40, 5, 30, 11) <= 1e-10);
}

TEST_CASE("CX commutes with X on its target (relat1) on random states") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector a = init_state(3);
    for (int i = 0; i < 8; ++i) {
      a.amps[i] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    a.amps.normalize();
    StateVector b = a;

    apply_1q(a, pauli_x(), 2);
    apply_cx(a, 1, 2);

    apply_cx(b, 1, 2);
    apply_1q(b, pauli_x(), 2);

    CHECK(max_diff(a.amps, b.amps) == 0.0);
  }
}

TEST_CASE("X-conjugation identity (relat2) as 4x4 matrices via the oracle") {
  const CMatrix cx = cx_matrix(0, 1, 2);
  const CMatrix xc = embed_1q(pauli_x(), 0, 2);
  const CMatrix xt = embed_1q(pauli_x(), 1, 2);
  CHECK((xc * cx * xc - xt * cx).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bitstring round trip") {
  CHECK(bits_of_index(0b100, 3) == "100");
  CHECK(index_of_bits("100") == 0b100);
  CHECK(bits_of_index(5, 4) == "0101");
  CHECK_THROWS_AS(index_of_bits("10a"), ValidationError);
}
