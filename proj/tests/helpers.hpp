#pragma once

#include <cmath>
#include <cstdint>

#include "naed/statevec.hpp"
#include "naed/types.hpp"

namespace naed::test {

inline double max_diff(const CVector& a, const CVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline CVector basis(int n_qubits, const std::string& bits) {
  CVector v = CVector::Zero(std::int64_t{1} << n_qubits);
  v[index_of_bits(bits)] = 1.0;
  return v;
}

inline std::uint64_t total_shots(const Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [bits, n] : counts) total += n;
  return total;
}

}  // namespace naed::test
