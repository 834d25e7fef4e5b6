#include "hqc/connection.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hqc {

namespace detail {

// Components as derived from A_i = <beta|d_i|alpha> in the psi = 0, U3 = I
// gauge. A_theta2 vanishes identically; A_phi2 is diagonal.
Eigen::Matrix2cd contracted_one(const double* p, const double* d) {
  const double s1 = std::sin(p[0]);
  const double s2 = std::sin(p[1]);
  const double sin2t1 = std::sin(2.0 * p[0]);
  const Complex ephase = std::polar(1.0, p[3] - p[2]);  // e^{i(phi2 - phi1)}
  const Complex i(0.0, 1.0);

  const double s1sq = s1 * s1;
  const double s2sq = s2 * s2;
  Eigen::Matrix2cd m;
  m(0, 0) = -i * s1sq * d[2];
  m(1, 1) = i * s2sq * (s1sq * d[2] - d[3]);
  const Complex offdiag = d[0] + i * (0.5 * sin2t1) * d[2];
  m(0, 1) = -s2 * std::conj(ephase) * offdiag;
  m(1, 0) = s2 * ephase * std::conj(offdiag);
  return m;
}

Eigen::Matrix4cd contracted_two(const double* p, const double* d) {
  const Eigen::Matrix2cd ma = contracted_one(p, d);
  const Eigen::Matrix2cd mb = contracted_one(p + 4, d + 4);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  // ma kron I2 + I2 kron mb
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(2 * i, 2 * j) += ma(i, j);
      m(2 * i + 1, 2 * j + 1) += ma(i, j);
    }
  }
  m.topLeftCorner<2, 2>() += mb;
  m.bottomRightCorner<2, 2>() += mb;
  const double ca = std::cos(p[1]);
  const double cb = std::cos(p[5]);
  m(3, 3) += Complex(0.0, d[8] * ca * ca * cb * cb);
  return m;
}

namespace {

std::array<Eigen::Matrix2cd, 4> one_qubit_components(const OneQubitPoint& p) {
  const double s1 = std::sin(p.theta1);
  const double s2 = std::sin(p.theta2);
  const double sin2t1 = std::sin(2.0 * p.theta1);
  const Complex ephase = std::polar(1.0, p.phi2 - p.phi1);
  const Complex i(0.0, 1.0);
  const double s1sq = s1 * s1;
  const double s2sq = s2 * s2;

  std::array<Eigen::Matrix2cd, 4> a;
  a[0] << 0.0, -s2 * std::conj(ephase), s2 * ephase, 0.0;
  a[1].setZero();
  a[2] << -i * s1sq, -i * 0.5 * sin2t1 * s2 * std::conj(ephase),
      -i * 0.5 * sin2t1 * s2 * ephase, i * s2sq * s1sq;
  a[3] << 0.0, 0.0, 0.0, -i * s2sq;
  return a;
}

}  // namespace

}  // namespace detail

std::vector<ConnectionComponent> ConnectionField::components(
    std::span<const double> point) const {
  const int n = coord_count(system_);
  if (static_cast<int>(point.size()) != n) {
    throw std::invalid_argument("ConnectionField: point dimension mismatch");
  }
  std::vector<ConnectionComponent> out;
  out.reserve(n);
  if (system_ == System::OneQubit) {
    const auto a = detail::one_qubit_components(OneQubitPoint::from_span(point));
    for (int i = 0; i < 4; ++i) {
      out.push_back({i, Matrix(a[i])});
    }
    return out;
  }
  const TwoQubitPoint p = TwoQubitPoint::from_span(point);
  const auto aa = detail::one_qubit_components(p.a);
  const auto ab = detail::one_qubit_components(p.b);
  const Matrix i2 = Matrix::Identity(2, 2);
  for (int i = 0; i < 4; ++i) {
    out.push_back({i, kron(Matrix(aa[i]), i2)});
  }
  for (int i = 0; i < 4; ++i) {
    out.push_back({4 + i, kron(i2, Matrix(ab[i]))});
  }
  Matrix axi = Matrix::Zero(4, 4);
  const double ca = std::cos(p.a.theta2);
  const double cb = std::cos(p.b.theta2);
  axi(3, 3) = Complex(0.0, ca * ca * cb * cb);
  out.push_back({8, axi});
  return out;
}

Matrix ConnectionField::contracted(std::span<const double> point,
                                   std::span<const double> step) const {
  const int n = coord_count(system_);
  if (static_cast<int>(point.size()) != n || static_cast<int>(step.size()) != n) {
    throw std::invalid_argument("ConnectionField: dimension mismatch");
  }
  if (system_ == System::OneQubit) {
    return Matrix(detail::contracted_one(point.data(), step.data()));
  }
  return Matrix(detail::contracted_two(point.data(), step.data()));
}

Matrix connection_fd_oracle(System system, std::span<const double> point,
                            int coordinate, double h) {
  const int n = coord_count(system);
  if (static_cast<int>(point.size()) != n) {
    throw std::invalid_argument("connection_fd_oracle: point dimension mismatch");
  }
  if (coordinate < 0 || coordinate >= n) {
    throw std::invalid_argument("connection_fd_oracle: coordinate out of range");
  }
  if (!(h >= 1e-8 && h <= 1e-3)) {
    throw std::invalid_argument("connection_fd_oracle: h out of [1e-8, 1e-3]");
  }

  std::vector<double> plus(point.begin(), point.end());
  std::vector<double> minus(point.begin(), point.end());
  plus[coordinate] += h;
  minus[coordinate] -= h;

  if (system == System::OneQubit) {
    const Matrix w = givens_frame(OneQubitPoint::from_span(point));
    const Matrix dw = (givens_frame(OneQubitPoint::from_span(plus)) -
                       givens_frame(OneQubitPoint::from_span(minus))) /
                      (2.0 * h);
    // Degenerate subspace columns (|0>, |1>) sit at indices 1, 2.
    return (w.adjoint() * dw).block(1, 1, 2, 2);
  }
  const Matrix v = two_qubit_frame(TwoQubitPoint::from_span(point));
  const Matrix dv = (two_qubit_frame(TwoQubitPoint::from_span(plus)) -
                     two_qubit_frame(TwoQubitPoint::from_span(minus))) /
                    (2.0 * h);
  const Matrix full = v.adjoint() * dv;
  // Zero-energy columns |00>,|01>,|10>,|11> of the 9-dim tensor basis.
  constexpr int idx[4] = {4, 5, 7, 8};
  Matrix out(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out(r, c) = full(idx[r], idx[c]);
    }
  }
  return out;
}

}  // namespace hqc
