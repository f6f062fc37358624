#include "naed/gates.hpp"

#include <cmath>

namespace naed {

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex eip = std::polar(1.0, phi);
  const Complex eil = std::polar(1.0, lambda);
  Matrix2 m;
  m << c, -eil * s, eip * s, eip * eil * c;
  return m;
}

double unitarity_defect(const Matrix2& u) {
  return (u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

U3Angles u3_angles_of(const Matrix2& u) {
  if (unitarity_defect(u) > 1e-10) {
    throw ValidationError("u3_angles_of requires a unitary matrix");
  }
  constexpr double kTiny = 1e-12;
  U3Angles a;
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  a.theta = 2.0 * std::atan2(s, c);
  if (s <= kTiny) {
    // Diagonal: only phi+lambda is identifiable.
    a.global_phase = std::arg(u(0, 0));
    a.phi = 0.0;
    a.lambda = std::arg(u(1, 1)) - a.global_phase;
  } else if (c <= kTiny) {
    // Anti-diagonal: only the off-diagonal phases are identifiable.
    a.global_phase = std::arg(u(1, 0));
    a.phi = 0.0;
    a.lambda = std::arg(-u(0, 1)) - a.global_phase;
  } else {
    a.global_phase = std::arg(u(0, 0));
    a.phi = std::arg(u(1, 0)) - a.global_phase;
    a.lambda = std::arg(-u(0, 1)) - a.global_phase;
  }
  return a;
}

}  // namespace naed
