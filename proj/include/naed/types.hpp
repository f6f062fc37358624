#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace naed {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using RVector = Eigen::VectorXd;

/// Largest register the dense engine accepts (2^25 amplitudes = 512 MB).
inline constexpr int kMaxQubits = 25;
/// Largest register the dense-matrix oracle accepts (2^12 x 2^12 products).
inline constexpr int kMaxOracleQubits = 12;

/// An argument violates an operation's contract.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A register, matrix, or grid cell exceeds the supported size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run configuration cannot be satisfied.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DSL text is malformed; carries the 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line;
  int column;
};

}  // namespace naed
