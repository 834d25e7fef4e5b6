#include "hqc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hqc {

namespace {

void require_finite(std::span<const double> coords, const char* what) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
  }
}

}  // namespace

OneQubitPoint OneQubitPoint::from_span(std::span<const double> coords) {
  if (coords.size() != 4) {
    throw std::invalid_argument("OneQubitPoint: expected 4 coordinates");
  }
  require_finite(coords, "OneQubitPoint");
  return {coords[0], coords[1], coords[2], coords[3]};
}

TwoQubitPoint TwoQubitPoint::from_span(std::span<const double> coords) {
  if (coords.size() != 9) {
    throw std::invalid_argument("TwoQubitPoint: expected 9 coordinates");
  }
  require_finite(coords, "TwoQubitPoint");
  TwoQubitPoint p;
  p.a = OneQubitPoint::from_span(coords.subspan(0, 4));
  p.b = OneQubitPoint::from_span(coords.subspan(4, 4));
  p.xi = coords[8];
  return p;
}

ModelEnergy::ModelEnergy(double e) : epsilon(e) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw std::invalid_argument("ModelEnergy: epsilon must be positive");
  }
}

Matrix givens_frame(const OneQubitPoint& p) {
  const double c1 = std::cos(p.theta1), s1 = std::sin(p.theta1);
  const double c2 = std::cos(p.theta2), s2 = std::sin(p.theta2);
  const Complex e1 = std::polar(1.0, p.phi1);
  const Complex e2 = std::polar(1.0, p.phi2);

  // W = U1 U2 with alpha_j = e^{i phi_j} sin(theta_j), beta_j = cos(theta_j).
  Matrix w(3, 3);
  w(0, 0) = c1 * c2;
  w(0, 1) = std::conj(e1) * s1;
  w(0, 2) = c1 * std::conj(e2) * s2;
  w(1, 0) = -e1 * s1 * c2;
  w(1, 1) = c1;
  w(1, 2) = -e1 * std::conj(e2) * s1 * s2;
  w(2, 0) = -e2 * s2;
  w(2, 1) = 0.0;
  w(2, 2) = c2;
  return w;
}

Matrix hamiltonian_one(const OneQubitPoint& p, const ModelEnergy& e) {
  // W diag(eps,0,0) W^dagger = eps * w0 w0^dagger.
  const Matrix w = givens_frame(p);
  const Eigen::Vector3cd w0 = w.col(0);
  return e.epsilon * (w0 * w0.adjoint());
}

Matrix entangling_rotation(double xi) {
  Matrix w = Matrix::Identity(9, 9);
  w(8, 8) = std::polar(1.0, xi);
  return w;
}

Matrix two_qubit_frame(const TwoQubitPoint& p) {
  return entangling_rotation(p.xi) * kron(givens_frame(p.a), givens_frame(p.b));
}

Matrix hamiltonian_two(const TwoQubitPoint& p, const ModelEnergy& e) {
  const Matrix ha = hamiltonian_one(p.a, e);
  const Matrix hb = hamiltonian_one(p.b, e);
  const Matrix i3 = Matrix::Identity(3, 3);
  const Matrix sum = kron(ha, i3) + kron(i3, hb);
  const Matrix wxi = entangling_rotation(p.xi);
  return wxi * sum * wxi.adjoint();
}

Matrix hamiltonian_two_entrywise(const TwoQubitPoint& p, const ModelEnergy& e) {
  const Matrix ha = hamiltonian_one(p.a, e);
  const Matrix hb = hamiltonian_one(p.b, e);
  Matrix h(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
          Complex v = 0.0;
          if (k == l) v += ha(i, j);
          if (i == j) v += hb(k, l);
          h(3 * i + k, 3 * j + l) = v;
        }
      }
    }
  }
  // Conjugation by exp(i xi |11><11|) phases the last row and column.
  const Complex phase = std::polar(1.0, p.xi);
  for (int c = 0; c < 8; ++c) {
    h(8, c) *= phase;
    h(c, 8) *= std::conj(phase);
  }
  return h;
}

OneQubitPoint cp2_from_inhomogeneous(Complex xi1, Complex xi2) {
  OneQubitPoint p;
  p.theta1 = std::atan(std::abs(xi1));
  p.theta2 = std::atan(std::abs(xi2));
  p.phi1 = std::arg(xi1);
  p.phi2 = std::arg(xi2);
  return p;
}

}  // namespace hqc
