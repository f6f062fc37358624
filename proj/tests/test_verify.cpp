#include "naed/verify.hpp"

#include <doctest.h>

#include <cmath>

#include "naed/gates.hpp"
#include "naed/logical.hpp"
#include "naed/rng.hpp"
#include "helpers.hpp"

using namespace naed;

TEST_CASE("unitary_of on an empty circuit is the identity") {
  PhysicalCircuit pc;
  pc.n_qubits = 3;
  CHECK((unitary_of(pc) - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("unitary_of CX(1,2) on three qubits equals I2 (x) CX") {
  PhysicalCircuit pc;
  pc.n_qubits = 3;
  pc.gates = {PhysicalGate::cx(1, 2)};
  CMatrix cx4(4, 4);
  cx4 << 1, 0, 0, 0,
         0, 1, 0, 0,
         0, 0, 0, 1,
         0, 0, 1, 0;
  const CMatrix expected = kron(CMatrix::Identity(2, 2), cx4);
  CHECK((unitary_of(pc) - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unitary_of X.X collapses to the identity") {
  PhysicalCircuit pc;
  pc.n_qubits = 2;
  pc.gates = {PhysicalGate::x(0), PhysicalGate::x(0)};
  CHECK((unitary_of(pc) - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK_THROWS_AS(unitary_of(random_circuit(13, 1, 0)), CapacityError);
}

TEST_CASE("unitary_of multiplies in time order") {
  // X then H on one qubit: the product must be H * X, not X * H.
  PhysicalCircuit pc;
  pc.n_qubits = 1;
  pc.gates = {PhysicalGate::x(0), PhysicalGate::u3(0, M_PI_2, 0.0, M_PI)};
  const CMatrix expected = CMatrix(hadamard()) * CMatrix(pauli_x());
  CHECK((unitary_of(pc) - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("appendix identities hold to near machine precision") {
  CHECK(check_identities(2, {}) <= 1e-12);
  CHECK(check_identities(3, {0}) <= 1e-12);
  CHECK(check_identities(4, {1, 3}) <= 1e-12);
  CHECK(check_identities(5, {0, 1, 2, 3, 4}) <= 1e-12);
}

TEST_CASE("M_S maps the codeword pair for Q=3, S={0}") {
  const BitFlipCode code = make_code(3, {0});
  const CMatrix m = encoding_matrix(code);
  SplitMix64 rng(21);
  const Complex alpha(rng.uniform(), rng.uniform());
  const Complex beta(rng.uniform(), rng.uniform());
  const CVector logical =
      alpha * codeword_ket(code, false) + beta * codeword_ket(code, true);
  CVector plain = CVector::Zero(8);
  plain[index_of_bits("000")] = alpha;
  plain[index_of_bits("111")] = beta;
  CHECK((m * logical - plain).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("logical U3 theorem for small codes") {
  CHECK(check_logical_u3(1, {}, 20) <= 1e-10);
  CHECK(check_logical_u3(2, {1}, 20) <= 1e-10);
  CHECK(check_logical_u3(3, {0, 2}, 20) <= 1e-10);
  CHECK(check_logical_u3(4, {0, 1}, 20) <= 1e-10);
}

TEST_CASE("logical Hadamard sends |0>_L to the codeword superposition") {
  const BitFlipCode code = make_code(2, {1});
  PhysicalCircuit pc;
  pc.n_qubits = 2;
  pc.gates = logical_u3(code, M_PI_2, 0.0, M_PI, 0);
  const CVector out = unitary_of(pc) * codeword_ket(code, false);
  const CVector expected =
      (codeword_ket(code, false) + codeword_ket(code, true)) / M_SQRT2;
  CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("logical CX theorem for small codes") {
  CHECK(check_logical_cx(1, {}, 10) <= 1e-10);
  CHECK(check_logical_cx(2, {1}, 10) <= 1e-10);
  CHECK(check_logical_cx(3, {0, 1}, 10) <= 1e-10);
}

TEST_CASE("logical CX swaps |10>_L and |11>_L for Q=2, S={1}") {
  const BitFlipCode code = make_code(2, {1});
  PhysicalCircuit pc;
  pc.n_qubits = 4;
  pc.gates = logical_cx(code, 0, 2);
  const CMatrix lcx = unitary_of(pc);
  const CVector in = CVector(
      kron(CMatrix(codeword_ket(code, true)),
           CMatrix(codeword_ket(code, false)))
          .col(0));
  const CVector want = CVector(
      kron(CMatrix(codeword_ket(code, true)),
           CMatrix(codeword_ket(code, true)))
          .col(0));
  CHECK((lcx * in - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("detectable-error characterization on the pi/8 grid") {
  CHECK(check_detectable_errors(2, {0}));
  CHECK(check_detectable_errors(3, {0, 1}));
}

TEST_CASE("u3_angles_of round-trips arbitrary unitaries") {
  SplitMix64 rng(88);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2 u =
        u3_matrix(rng.uniform() * 2 * M_PI, rng.uniform() * 2 * M_PI,
                  rng.uniform() * 2 * M_PI) *
        std::polar(1.0, rng.uniform() * 2 * M_PI);
    const U3Angles a = u3_angles_of(u);
    const Matrix2 back = std::polar(1.0, a.global_phase) *
                         u3_matrix(a.theta, a.phi, a.lambda);
    CHECK((u - back).cwiseAbs().maxCoeff() < 1e-10);
  }
  // Corner cases: diagonal and anti-diagonal matrices.
  const U3Angles z = u3_angles_of(pauli_z());
  CHECK((std::polar(1.0, z.global_phase) *
             u3_matrix(z.theta, z.phi, z.lambda) -
         pauli_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  const U3Angles y = u3_angles_of(pauli_y());
  CHECK((std::polar(1.0, y.global_phase) *
             u3_matrix(y.theta, y.phi, y.lambda) -
         pauli_y())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("run_verification passes its own battery") {
  const VerifyReport report = run_verification();
  CHECK(report.all_pass);
  CHECK(report.lines.size() >= 10);
}
