#pragma once

#include "naed/types.hpp"

namespace naed {

inline Matrix2 identity2() { return Matrix2::Identity(); }

inline Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

/// U3(theta, phi, lambda) =
///   [ cos(theta/2)              -e^{i lambda} sin(theta/2)       ]
///   [ e^{i phi} sin(theta/2)    e^{i(phi+lambda)} cos(theta/2)   ]
/// U3(pi/2, 0, pi) is the Hadamard gate.
Matrix2 u3_matrix(double theta, double phi, double lambda);

inline Matrix2 hadamard() { return u3_matrix(M_PI_2, 0.0, M_PI); }

struct U3Angles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double global_phase = 0.0;  // U == e^{i global_phase} * U3(theta, phi, lambda)
};

/// Decomposes an arbitrary 2x2 unitary into U3 angles plus a global phase.
/// Throws ValidationError when the matrix is not unitary to 1e-10.
U3Angles u3_angles_of(const Matrix2& u);

/// Conjugation in parameter space: sigma_x U3(t,p,l) sigma_x equals
/// e^{i(p+l)} U3(t, pi-p, pi-l). Theta is unchanged.
inline void x_conjugate_angles(double& phi, double& lambda) {
  phi = M_PI - phi;
  lambda = M_PI - lambda;
}

/// Max-norm of U^dagger U - I; zero for exact unitaries.
double unitarity_defect(const Matrix2& u);

}  // namespace naed
