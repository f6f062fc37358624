#include "naed/circuit.hpp"

#include <charconv>

#include "naed/gates.hpp"

namespace naed {

void PhysicalCircuit::validate() const {
  for (const auto& g : gates) {
    const bool ok =
        g.kind == GateKind::CX
            ? (g.q0 >= 0 && g.q0 < n_qubits && g.q1 >= 0 && g.q1 < n_qubits &&
               g.q0 != g.q1)
            : (g.q0 >= 0 && g.q0 < n_qubits);
    if (!ok) throw ValidationError("gate operand out of range");
    if (g.kind == GateKind::U3 &&
        !(std::isfinite(g.theta) && std::isfinite(g.phi) &&
          std::isfinite(g.lambda))) {
      throw ValidationError("u3 angles must be finite");
    }
  }
}

void apply_gate(StateVector& state, const PhysicalGate& gate) {
  switch (gate.kind) {
    case GateKind::U3:
      apply_1q(state, u3_matrix(gate.theta, gate.phi, gate.lambda), gate.q0);
      break;
    case GateKind::CX:
      apply_cx(state, gate.q0, gate.q1);
      break;
    case GateKind::X:
      apply_x(state, gate.q0);
      break;
  }
}

StateVector simulate(const PhysicalCircuit& circuit) {
  circuit.validate();
  StateVector state = init_state(circuit.n_qubits);
  for (const auto& g : circuit.gates) apply_gate(state, g);
  return state;
}

namespace {

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

std::string render_physical(const PhysicalCircuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::U3:
        out += "u3 " + number(g.theta) + " " + number(g.phi) + " " +
               number(g.lambda) + " q" + std::to_string(g.q0) + "\n";
        break;
      case GateKind::CX:
        out += "cx q" + std::to_string(g.q0) + " q" + std::to_string(g.q1) +
               "\n";
        break;
      case GateKind::X:
        out += "x q" + std::to_string(g.q0) + "\n";
        break;
    }
  }
  return out;
}

std::string render_dsl(const LogicalCircuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
  for (const auto& g : circuit.gates) {
    if (g.is_cx) {
      out += "cx q" + std::to_string(g.q0) + " q" + std::to_string(g.q1) +
             "\n";
    } else {
      out += "u3 " + number(g.theta) + " " + number(g.phi) + " " +
             number(g.lambda) + " q" + std::to_string(g.q0) + "\n";
    }
  }
  return out;
}

}  // namespace naed
