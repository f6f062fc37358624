#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "naed/types.hpp"

namespace naed {

/// One logical qubit's bit-flip encoding over Q physical qubits.
/// Codeword integers carry qubit i in bit i: x = sum over S of 2^i and
/// y = 2^Q - 1 - x, so the two codewords are bitwise complements.
struct BitFlipCode {
  int q = 1;                 // physical qubits per logical qubit
  std::set<int> s;           // qubits flipped by the encoding
  std::uint64_t x = 0;       // codeword of |0>_L
  std::uint64_t y = 0;       // codeword of |1>_L

  bool operator==(const BitFlipCode&) const = default;
};

enum class BlockOutcome { Zero, One, Invalid };

/// Either the decoded logical bitstring (all blocks valid) or a rejection.
struct ShotClassification {
  bool accepted = false;
  std::string logical;  // length N when accepted, empty otherwise

  static ShotClassification accept(std::string bits) {
    return {true, std::move(bits)};
  }
  static ShotClassification reject() { return {false, {}}; }

  bool operator==(const ShotClassification&) const = default;
};

/// Builds the code for (Q, S). Throws ValidationError when S contains an
/// index outside {0, ..., Q-1} and CapacityError when Q is outside [1, 25].
BitFlipCode make_code(int q, const std::set<int>& s);

/// The experiment's default set {0, ..., ceil(Q/2)-1}: ceil(Q/2) elements,
/// which balances the number of 0s and 1s in each codeword for even Q.
std::set<int> default_experiment_set(int q);

/// Renders a codeword integer as a block string with qubit 0 leftmost
/// (bit i of the integer becomes character i).
std::string codeword_string(const BitFlipCode& code, BlockOutcome which);

BlockOutcome classify_block(const BitFlipCode& code, const std::string& block);

/// Splits an N*Q-bit string into N consecutive Q-bit blocks (logical qubit 0
/// leftmost) and decodes each; any Invalid block rejects the shot.
ShotClassification classify_shot(const BitFlipCode& code, int n_logical,
                                 const std::string& bits);

/// Encodes a logical bitstring into its N*Q-bit physical string.
std::string encode_logical(const BitFlipCode& code, const std::string& logical);

/// Compact JSON form {"Q":int,"S":[int...]} used in result files.
std::string code_to_json(const BitFlipCode& code);

}  // namespace naed
