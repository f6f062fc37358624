#include "naed/logical.hpp"

#include <algorithm>
#include <cmath>

#include "naed/gates.hpp"

namespace naed {

std::vector<PhysicalGate> encoding_ops(const BitFlipCode& code,
                                       int block_offset) {
  std::vector<PhysicalGate> ops;
  ops.reserve(code.s.size());
  for (int i : code.s) ops.push_back(PhysicalGate::x(block_offset + i));
  return ops;
}

std::vector<PhysicalGate> logical_u3(const BitFlipCode& code, double theta,
                                     double phi, double lambda,
                                     int block_offset) {
  if (code.s.count(0)) x_conjugate_angles(phi, lambda);
  std::vector<PhysicalGate> ops;
  ops.reserve(2 * (code.q - 1) + 1);
  for (int i = 1; i < code.q; ++i) {
    ops.push_back(PhysicalGate::cx(block_offset, block_offset + i));
  }
  ops.push_back(PhysicalGate::u3(block_offset, theta, phi, lambda));
  for (int i = code.q - 1; i >= 1; --i) {
    ops.push_back(PhysicalGate::cx(block_offset, block_offset + i));
  }
  return ops;
}

std::vector<PhysicalGate> logical_cx(const BitFlipCode& code, int ctrl_offset,
                                     int tgt_offset) {
  if (std::abs(ctrl_offset - tgt_offset) < code.q) {
    throw ValidationError("logical_cx blocks overlap");
  }
  std::vector<PhysicalGate> ops = encoding_ops(code, tgt_offset);
  for (int i = 0; i < code.q; ++i) {
    ops.push_back(PhysicalGate::cx(ctrl_offset + i, tgt_offset + i));
  }
  return ops;
}

PhysicalCircuit lower(const LogicalCircuit& circuit, const BitFlipCode& code) {
  const int n_physical = circuit.n_qubits * code.q;
  if (n_physical > kMaxQubits) {
    throw CapacityError("lowered register needs " +
                        std::to_string(n_physical) + " qubits, limit is " +
                        std::to_string(kMaxQubits));
  }
  PhysicalCircuit out;
  out.n_qubits = n_physical;
  for (int k = 0; k < circuit.n_qubits; ++k) {
    auto ops = encoding_ops(code, k * code.q);
    out.gates.insert(out.gates.end(), ops.begin(), ops.end());
  }
  out.boundaries.push_back(static_cast<int>(out.gates.size()));
  for (const auto& g : circuit.gates) {
    if (g.q0 < 0 || g.q0 >= circuit.n_qubits ||
        (g.is_cx && (g.q1 < 0 || g.q1 >= circuit.n_qubits))) {
      throw ValidationError("logical gate operand out of range");
    }
    auto ops = g.is_cx
                   ? logical_cx(code, g.q0 * code.q, g.q1 * code.q)
                   : logical_u3(code, g.theta, g.phi, g.lambda, g.q0 * code.q);
    out.gates.insert(out.gates.end(), ops.begin(), ops.end());
    out.boundaries.push_back(static_cast<int>(out.gates.size()));
  }
  return out;
}

namespace {

// X on wire q commutes with g iff g does not touch q, or g is a CX whose
// target is q (X on a CX target slides through the CX).
bool x_commutes_through(const PhysicalGate& g, int q) {
  if (!g.touches(q)) return true;
  return g.kind == GateKind::CX && g.q1 == q;
}

struct WorkingCircuit {
  std::vector<PhysicalGate> gates;
  std::vector<int> boundaries;

  void erase(int i) {
    gates.erase(gates.begin() + i);
    for (auto& b : boundaries) {
      if (b > i) --b;
    }
  }

  // Removing j first keeps i's position valid.
  void erase_pair(int i, int j) {
    erase(j);
    erase(i);
  }
};

bool cancel_adjacent_pair(WorkingCircuit& wc) {
  for (std::size_t i = 0; i + 1 < wc.gates.size(); ++i) {
    const auto& a = wc.gates[i];
    const auto& b = wc.gates[i + 1];
    const bool xx = a.kind == GateKind::X && b.kind == GateKind::X &&
                    a.q0 == b.q0;
    const bool cxcx = a.kind == GateKind::CX && b.kind == GateKind::CX &&
                      a.q0 == b.q0 && a.q1 == b.q1;
    if (xx || cxcx) {
      wc.erase_pair(static_cast<int>(i), static_cast<int>(i) + 1);
      return true;
    }
  }
  return false;
}

bool drop_cx_with_clear_control(WorkingCircuit& wc) {
  for (std::size_t i = 0; i < wc.gates.size(); ++i) {
    if (wc.gates[i].kind != GateKind::CX) continue;
    const int control = wc.gates[i].q0;
    bool touched = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (wc.gates[j].touches(control)) {
        touched = true;
        break;
      }
    }
    if (!touched) {
      wc.erase(static_cast<int>(i));
      return true;
    }
  }
  return false;
}

bool cancel_commuting_x_pair(WorkingCircuit& wc) {
  for (std::size_t i = 0; i < wc.gates.size(); ++i) {
    if (wc.gates[i].kind != GateKind::X) continue;
    const int q = wc.gates[i].q0;
    for (std::size_t j = i + 1; j < wc.gates.size(); ++j) {
      const auto& g = wc.gates[j];
      if (g.kind == GateKind::X && g.q0 == q) {
        wc.erase_pair(static_cast<int>(i), static_cast<int>(j));
        return true;
      }
      if (!x_commutes_through(g, q)) break;
    }
  }
  return false;
}

}  // namespace

PhysicalCircuit simplify(const PhysicalCircuit& circuit) {
  circuit.validate();
  WorkingCircuit wc{circuit.gates, circuit.boundaries};
  bool changed = true;
  while (changed) {
    changed = cancel_adjacent_pair(wc) || drop_cx_with_clear_control(wc) ||
              cancel_commuting_x_pair(wc);
  }
  PhysicalCircuit out;
  out.n_qubits = circuit.n_qubits;
  out.gates = std::move(wc.gates);
  out.boundaries = std::move(wc.boundaries);
  return out;
}

}  // namespace naed
