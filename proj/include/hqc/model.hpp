#pragma once

#include <span>

#include "hqc/matrix.hpp"
#include "hqc/system.hpp"

namespace hqc {

/// A point of the one-qubit control manifold. Angles are radians and
/// unrestricted; every derived quantity is 2*pi-periodic in each of them.
struct OneQubitPoint {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  static OneQubitPoint from_span(std::span<const double> coords);
};

/// A point of the two-qubit control manifold: one chart point per qubit
/// plus the entangling angle xi.
struct TwoQubitPoint {
  OneQubitPoint a;
  OneQubitPoint b;
  double xi = 0.0;

  static TwoQubitPoint from_span(std::span<const double> coords);
};

/// Auxiliary-level energy of the three-state model. The holonomy never
/// depends on it; it only enters the spectral checks.
struct ModelEnergy {
  explicit ModelEnergy(double e = 1.0);
  double epsilon;
};

/// 3x3 unitary frame W = U1 U2 of the Givens decomposition, gauge-fixed to
/// psi_1 = psi_2 = 0 and U3 = I. Basis order (|2>, |0>, |1>): the first
/// column and row refer to the auxiliary state.
Matrix givens_frame(const OneQubitPoint& p);

/// Iso-spectral one-qubit Hamiltonian W diag(eps,0,0) W^dagger, spectrum
/// {eps, 0, 0} at every point.
Matrix hamiltonian_one(const OneQubitPoint& p, const ModelEnergy& e = ModelEnergy());

/// Diagonal 9x9 entangling rotation exp(i xi |11><11|) in the tensor basis.
Matrix entangling_rotation(double xi);

/// 9x9 frame W_xi (W_a kron W_b) whose zero-energy columns span the
/// two-qubit computational subspace.
Matrix two_qubit_frame(const TwoQubitPoint& p);

/// Full two-qubit Hamiltonian by direct conjugation:
/// W_xi (H_a kron I3 + I3 kron H_b) W_xi^dagger. Spectrum {2eps, eps x4, 0 x4}.
Matrix hamiltonian_two(const TwoQubitPoint& p, const ModelEnergy& e = ModelEnergy());

/// The same Hamiltonian assembled entrywise: the Kronecker-sum pattern with
/// the e^{+-i xi} phase mask on the |11> row and column. Independent of
/// hamiltonian_two's matrix products; the two must agree elementwise.
Matrix hamiltonian_two_entrywise(const TwoQubitPoint& p, const ModelEnergy& e = ModelEnergy());

/// Chart map of the complex projective plane: for xi_k = r_k e^{i phi_k},
/// theta_k = atan(r_k) in [0, pi/2), phi_k in (-pi, pi].
OneQubitPoint cp2_from_inhomogeneous(Complex xi1, Complex xi2);

}  // namespace hqc
