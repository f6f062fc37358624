#include "naed/logical.hpp"

#include <doctest.h>

#include <cmath>

#include "naed/circuits.hpp"
#include "naed/gates.hpp"
#include "naed/rng.hpp"
#include "naed/verify.hpp"
#include "helpers.hpp"

using namespace naed;

TEST_CASE("encoding_ops places one X per element of S") {
  const BitFlipCode c21 = make_code(2, {1});
  const auto ops = encoding_ops(c21, 0);
  REQUIRE(ops.size() == 1);
  CHECK(ops[0] == PhysicalGate::x(1));

  CHECK(encoding_ops(make_code(3, {}), 0).empty());

  const BitFlipCode c3 = make_code(3, {0, 1, 2});
  CHECK(c3.x == 7);
  const auto all = encoding_ops(c3, 3);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == PhysicalGate::x(3));
  CHECK(all[2] == PhysicalGate::x(5));
}

TEST_CASE("encoding_ops maps |0...0> to the codeword") {
  for (int q = 1; q <= 4; ++q) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q); ++bits) {
      std::set<int> s;
      for (int i = 0; i < q; ++i) {
        if (bits & (std::uint64_t{1} << i)) s.insert(i);
      }
      const BitFlipCode code = make_code(q, s);
      PhysicalCircuit pc;
      pc.n_qubits = q;
      pc.gates = encoding_ops(code, 0);
      const StateVector state = simulate(pc);
      CHECK(std::abs(state.amps[index_of_bits(codeword_string(
                         code, BlockOutcome::Zero))] -
                     Complex(1, 0)) == 0.0);
    }
  }
}

TEST_CASE("logical_u3 emits 2(Q-1) CX gates around one U3") {
  for (int q = 1; q <= 5; ++q) {
    const auto ops = logical_u3(make_code(q, {}), 0.3, 0.7, 1.1, 0);
    int cx = 0, u3 = 0;
    for (const auto& g : ops) {
      cx += g.kind == GateKind::CX;
      u3 += g.kind == GateKind::U3;
    }
    CHECK(cx == 2 * (q - 1));
    CHECK(u3 == 1);
  }
  // Q=1 reduces to the bare gate.
  const auto single = logical_u3(make_code(1, {}), 0.3, 0.7, 1.1, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == PhysicalGate::u3(0, 0.3, 0.7, 1.1));
}

TEST_CASE("logical Hadamard for Q=2, S={1} is the Fig-style 3-gate block") {
  const auto ops = logical_u3(make_code(2, {1}), M_PI_2, 0.0, M_PI, 0);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == PhysicalGate::cx(0, 1));
  CHECK(ops[1] == PhysicalGate::u3(0, M_PI_2, 0.0, M_PI));
  CHECK(ops[2] == PhysicalGate::cx(0, 1));
}

TEST_CASE("fan-in targets ascend, fan-out targets descend") {
  const auto ops = logical_u3(make_code(4, {}), 1.0, 2.0, 3.0, 4);
  REQUIRE(ops.size() == 7);
  CHECK(ops[0] == PhysicalGate::cx(4, 5));
  CHECK(ops[1] == PhysicalGate::cx(4, 6));
  CHECK(ops[2] == PhysicalGate::cx(4, 7));
  CHECK(ops[3].kind == GateKind::U3);
  CHECK(ops[4] == PhysicalGate::cx(4, 7));
  CHECK(ops[5] == PhysicalGate::cx(4, 6));
  CHECK(ops[6] == PhysicalGate::cx(4, 5));
}

TEST_CASE("logical_cx structure and counts") {
  const BitFlipCode c21 = make_code(2, {1});
  const auto ops = logical_cx(c21, 0, 2);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == PhysicalGate::x(3));
  CHECK(ops[1] == PhysicalGate::cx(0, 2));
  CHECK(ops[2] == PhysicalGate::cx(1, 3));

  const auto bare = logical_cx(make_code(1, {}), 0, 1);
  REQUIRE(bare.size() == 1);
  CHECK(bare[0] == PhysicalGate::cx(0, 1));

  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    std::set<int> s;
    for (int i = 0; i < 3; ++i) {
      if (bits & (std::uint64_t{1} << i)) s.insert(i);
    }
    const auto g = logical_cx(make_code(3, s), 0, 3);
    int cx = 0, x = 0;
    for (const auto& op : g) {
      cx += op.kind == GateKind::CX;
      x += op.kind == GateKind::X;
    }
    CHECK(cx == 3);
    CHECK(x == static_cast<int>(s.size()));
  }

  CHECK_THROWS_AS(logical_cx(make_code(2, {1}), 0, 1), ValidationError);
}

TEST_CASE("lower produces the unsimplified Fig-1 style GHZ(2,2) circuit") {
  const PhysicalCircuit pc =
      lower(ghz_logical(2), make_code(2, {1}));
  const std::vector<PhysicalGate> expected{
      PhysicalGate::x(1),
      PhysicalGate::x(3),
      PhysicalGate::cx(0, 1),
      PhysicalGate::u3(0, M_PI_2, 0.0, M_PI),
      PhysicalGate::cx(0, 1),
      PhysicalGate::x(3),
      PhysicalGate::cx(0, 2),
      PhysicalGate::cx(1, 3),
  };
  CHECK(pc.n_qubits == 4);
  CHECK(pc.gates == expected);
  CHECK(pc.boundaries == std::vector<int>{2, 5, 8});
}

TEST_CASE("lowering with Q=1, S=empty is the identity") {
  const LogicalCircuit logical = ghz_logical(3);
  const PhysicalCircuit pc = lower(logical, make_code(1, {}));
  REQUIRE(pc.gates.size() == logical.gates.size());
  CHECK(pc.gates[0] == PhysicalGate::u3(0, M_PI_2, 0.0, M_PI));
  CHECK(pc.gates[1] == PhysicalGate::cx(0, 1));
  CHECK(pc.gates[2] == PhysicalGate::cx(1, 2));
}

TEST_CASE("logical X complements codeword states blockwise") {
  for (const auto& s : {std::set<int>{}, {1}, {0, 1}}) {
    const BitFlipCode code = make_code(2, s);
    PhysicalCircuit pc;
    pc.n_qubits = 2;
    pc.gates = logical_u3(code, M_PI, 0.0, M_PI, 0);
    const CMatrix u = unitary_of(pc);
    const CVector from_x = u * codeword_ket(code, false);
    const CVector from_y = u * codeword_ket(code, true);
    CHECK(phase_aligned_distance(from_x, codeword_ket(code, true)) < 1e-10);
    CHECK(phase_aligned_distance(from_y, codeword_ket(code, false)) < 1e-10);
  }
}

TEST_CASE("simplify reduces Fig-1 to Fig-2 (one CX and two X removed)") {
  const PhysicalCircuit fig1 = lower(ghz_logical(2), make_code(2, {1}));
  const PhysicalCircuit fig2 = simplify(fig1);
  const std::vector<PhysicalGate> expected{
      PhysicalGate::x(1),
      PhysicalGate::u3(0, M_PI_2, 0.0, M_PI),
      PhysicalGate::cx(0, 1),
      PhysicalGate::cx(0, 2),
      PhysicalGate::cx(1, 3),
  };
  CHECK(fig2.gates == expected);
  CHECK(fig2.boundaries == std::vector<int>{1, 3, 5});

  // Fixpoint: simplifying again changes nothing.
  CHECK(simplify(fig2).gates == fig2.gates);
}

TEST_CASE("simplify cancels a bare self-inverse pair") {
  PhysicalCircuit pc;
  pc.n_qubits = 1;
  pc.gates = {PhysicalGate::x(0), PhysicalGate::x(0)};
  CHECK(simplify(pc).gates.empty());
}

TEST_CASE("simplify preserves the output state from |0...0>") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const PhysicalCircuit pc =
        random_circuit(2 + static_cast<int>(rng.below(4)), 30, rng.next());
    const StateVector before = simulate(pc);
    const StateVector after = simulate(simplify(pc));
    CHECK(phase_aligned_distance(before.amps, after.amps) <= 1e-10);
  }
}

TEST_CASE("encoding matrix is an involution and commutes with L(U3) "
          "when 0 is outside S") {
  const BitFlipCode code = make_code(3, {1, 2});
  const CMatrix m = encoding_matrix(code);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m * m - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  PhysicalCircuit pc;
  pc.n_qubits = 3;
  pc.gates = logical_u3(make_code(3, {}), 0.4, 1.2, 2.5, 0);
  const CMatrix lu = unitary_of(pc);
  CHECK((lu * m - m * lu).cwiseAbs().maxCoeff() < 1e-14);
}
