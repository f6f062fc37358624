#include "naed/code.hpp"

#include <sstream>

namespace naed {

BitFlipCode make_code(int q, const std::set<int>& s) {
  if (q < 1 || q > kMaxQubits) {
    throw CapacityError("Q must be in [1, " + std::to_string(kMaxQubits) +
                        "], got " + std::to_string(q));
  }
  BitFlipCode code;
  code.q = q;
  code.s = s;
  for (int i : s) {
    if (i < 0 || i >= q) {
      throw ValidationError("S contains qubit " + std::to_string(i) +
                            " outside {0,...," + std::to_string(q - 1) + "}");
    }
    code.x |= std::uint64_t{1} << i;
  }
  code.y = ((std::uint64_t{1} << q) - 1) ^ code.x;
  return code;
}

std::set<int> default_experiment_set(int q) {
  if (q < 1) throw ValidationError("Q must be positive");
  std::set<int> s;
  for (int i = 0; i < (q + 1) / 2; ++i) s.insert(i);
  return s;
}

std::string codeword_string(const BitFlipCode& code, BlockOutcome which) {
  const std::uint64_t w = which == BlockOutcome::One ? code.y : code.x;
  std::string out(code.q, '0');
  for (int i = 0; i < code.q; ++i) {
    if (w & (std::uint64_t{1} << i)) out[i] = '1';
  }
  return out;
}

namespace {

std::uint64_t block_value(const std::string& block) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] != '0' && block[i] != '1') {
      throw ValidationError("block contains a character other than 0/1");
    }
    if (block[i] == '1') v |= std::uint64_t{1} << i;
  }
  return v;
}

}  // namespace

BlockOutcome classify_block(const BitFlipCode& code, const std::string& block) {
  if (static_cast<int>(block.size()) != code.q) {
    throw ValidationError("block length " + std::to_string(block.size()) +
                          " does not match Q=" + std::to_string(code.q));
  }
  const std::uint64_t v = block_value(block);
  if (v == code.x) return BlockOutcome::Zero;
  if (v == code.y) return BlockOutcome::One;
  return BlockOutcome::Invalid;
}

ShotClassification classify_shot(const BitFlipCode& code, int n_logical,
                                 const std::string& bits) {
  if (n_logical < 1) throw ValidationError("N must be positive");
  if (bits.size() != static_cast<std::size_t>(n_logical) *
                         static_cast<std::size_t>(code.q)) {
    throw ValidationError("bitstring length " + std::to_string(bits.size()) +
                          " does not match N*Q=" +
                          std::to_string(n_logical * code.q));
  }
  std::string logical(n_logical, '0');
  for (int k = 0; k < n_logical; ++k) {
    switch (classify_block(code, bits.substr(static_cast<std::size_t>(k) *
                                                 code.q,
                                             code.q))) {
      case BlockOutcome::Zero:
        break;
      case BlockOutcome::One:
        logical[k] = '1';
        break;
      case BlockOutcome::Invalid:
        return ShotClassification::reject();
    }
  }
  return ShotClassification::accept(std::move(logical));
}

std::string encode_logical(const BitFlipCode& code,
                           const std::string& logical) {
  std::string out;
  out.reserve(logical.size() * code.q);
  for (char c : logical) {
    if (c != '0' && c != '1') {
      throw ValidationError("logical string contains a character other "
                            "than 0/1");
    }
    out += codeword_string(code,
                           c == '1' ? BlockOutcome::One : BlockOutcome::Zero);
  }
  return out;
}

std::string code_to_json(const BitFlipCode& code) {
  std::ostringstream os;
  os << "{\"Q\":" << code.q << ",\"S\":[";
  bool first = true;
  for (int i : code.s) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "]}";
  return os.str();
}

}  // namespace naed
