#pragma once

#include <string>
#include <vector>

#include "naed/statevec.hpp"
#include "naed/types.hpp"

namespace naed {

enum class GateKind { U3, CX, X };

/// One gate over the physical register. U3 carries three Euler angles in
/// radians; CX carries (control, target); X carries a single qubit.
struct PhysicalGate {
  GateKind kind = GateKind::X;
  int q0 = 0;  // U3/X qubit, or CX control
  int q1 = 0;  // CX target
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;

  static PhysicalGate u3(int q, double theta, double phi, double lambda) {
    PhysicalGate g;
    g.kind = GateKind::U3;
    g.q0 = q;
    g.theta = theta;
    g.phi = phi;
    g.lambda = lambda;
    return g;
  }
  static PhysicalGate cx(int control, int target) {
    PhysicalGate g;
    g.kind = GateKind::CX;
    g.q0 = control;
    g.q1 = target;
    return g;
  }
  static PhysicalGate x(int q) {
    PhysicalGate g;
    g.kind = GateKind::X;
    g.q0 = q;
    return g;
  }

  bool touches(int q) const {
    return q == q0 || (kind == GateKind::CX && q == q1);
  }

  bool operator==(const PhysicalGate&) const = default;
};

/// Gate list applied left to right (time order). `boundaries` marks gate-list
/// cut points at logical-gate edges, maintained by lower()/simplify() and
/// consumed by injection studies; it never affects simulation.
struct PhysicalCircuit {
  int n_qubits = 0;
  std::vector<PhysicalGate> gates;
  std::vector<int> boundaries;

  void validate() const;
};

/// Gate over logical qubits: U3 with angles, or CX.
struct LogicalGate {
  bool is_cx = false;
  int q0 = 0;
  int q1 = 0;
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;

  static LogicalGate u3(int q, double theta, double phi, double lambda) {
    return {false, q, 0, theta, phi, lambda};
  }
  static LogicalGate cx(int control, int target) {
    return {true, control, target, 0.0, 0.0, 0.0};
  }

  bool operator==(const LogicalGate&) const = default;
};

struct LogicalCircuit {
  int n_qubits = 0;
  std::vector<LogicalGate> gates;

  bool operator==(const LogicalCircuit&) const = default;
};

/// Runs a circuit on |00...0>.
StateVector simulate(const PhysicalCircuit& circuit);

/// Applies one gate to an existing state.
void apply_gate(StateVector& state, const PhysicalGate& gate);

/// Line-oriented text form, one gate per line (`x q3`,
/// `u3 1.5707963267948966 0 3.141592653589793 q0`, `cx q0 q2`) with a
/// `qubits <n>` header. Angles use shortest round-trip decimal form.
std::string render_physical(const PhysicalCircuit& circuit);

/// Canonical DSL text for a logical circuit (same grammar parse_dsl reads).
std::string render_dsl(const LogicalCircuit& circuit);

}  // namespace naed
