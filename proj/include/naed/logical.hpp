#pragma once

#include <vector>

#include "naed/circuit.hpp"
#include "naed/code.hpp"

namespace naed {

/// One X gate on block qubit block_offset+i for each i in S. Applied to
/// |0...0> the block becomes the |0>_L codeword.
std::vector<PhysicalGate> encoding_ops(const BitFlipCode& code,
                                       int block_offset);

/// Logical U3 on one encoded block: fan-in CX(0,i) for i = 1..Q-1, a single
/// physical U3 on block qubit 0, then the fan-out CXs in reverse order —
/// exactly 2(Q-1) CX gates. When 0 is in S the center gate's angles are
/// conjugated in parameter space (sigma_x U3 sigma_x), which matches the
/// X-sandwich construction up to a global phase of e^{i(phi+lambda)}.
std::vector<PhysicalGate> logical_u3(const BitFlipCode& code, double theta,
                                     double phi, double lambda,
                                     int block_offset);

/// Logical CX between two encoded blocks: re-encode the target block, then
/// CX(ctrl_offset+i, tgt_offset+i) for i = 0..Q-1.
/// Throws ValidationError when the blocks overlap.
std::vector<PhysicalGate> logical_cx(const BitFlipCode& code, int ctrl_offset,
                                     int tgt_offset);

/// Maps a logical circuit onto N*Q physical qubits: encoding prologue for
/// every logical qubit, then each logical gate through logical_u3/logical_cx.
/// The result's `boundaries` mark the end of the prologue and of each
/// logical gate.
PhysicalCircuit lower(const LogicalCircuit& circuit, const BitFlipCode& code);

/// Removes gates that cannot change the output state of the circuit when run
/// from |00...0>, to fixpoint:
///   (a) adjacent self-inverse pairs (X·X, CX·CX on the same wires),
///   (b) CX whose control qubit no earlier gate touches (control still |0>),
///   (c) X pairs on one qubit separated only by gates that commute with X
///       on that wire (disjoint gates, or CX targeting it).
/// Not a general-purpose optimizer: rewrites are only valid from |00...0>.
PhysicalCircuit simplify(const PhysicalCircuit& circuit);

}  // namespace naed
