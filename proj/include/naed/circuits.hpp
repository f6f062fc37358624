#pragma once

#include <map>
#include <string>

#include "naed/circuit.hpp"
#include "naed/code.hpp"

namespace naed {

/// Sparse probability distribution keyed by bitstring; absent keys are 0.
using Pdf = std::map<std::string, double>;

/// H on logical qubit 0 followed by CX(i, i+1) for i = 0..N-2: exactly N-1
/// CX gates. Throws ValidationError for N < 2, CapacityError for N > 12.
LogicalCircuit ghz_logical(int n_logical);

/// The code used by the GHZ experiment pipeline for a given Q: the default
/// experiment set, except that Q = 1 means no encoding at all (S empty), so
/// the lowered circuit is the plain unencoded one.
BitFlipCode experiment_code(int q);

/// simplify(lower(ghz_logical(N), experiment_code(Q))). For Q = 1 this is
/// the unencoded GHZ circuit verbatim. Throws CapacityError when N*Q > 25.
PhysicalCircuit build_ghz(int n_logical, int q);

/// The exact noiseless distribution of build_ghz(N, Q): mass 0.5 on the
/// encoding of logical all-zeros and 0.5 on logical all-ones.
Pdf ideal_pdf(int n_logical, int q);

/// Parses the logical-circuit DSL:
///   qubits <N>
///   h q<i> | x q<i> | u3 <theta> <phi> <lambda> q<i> | cx q<i> q<j>
/// with '#' comments and angles in decimal radians. h and x are sugar for
/// U3(pi/2,0,pi) and U3(pi,0,pi). Throws ParseError with a 1-based
/// line/column on malformed input.
LogicalCircuit parse_dsl(const std::string& text);

}  // namespace naed
