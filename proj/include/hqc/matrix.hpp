#pragma once

#include <Eigen/Dense>

#include "hqc/system.hpp"

namespace hqc {

/// Library-wide unitarity tolerance. Below reported optimizer accuracy,
/// above rounding accumulated over ~10^3 step products.
inline constexpr double kUnitaryTol = 1e-12;

/// Tolerance for accepting a matrix as anti-Hermitian.
inline constexpr double kSkewTol = 1e-10;

/// ||M + M^dagger||_F, zero for exactly anti-Hermitian input.
double skew_defect(const Matrix& m);

/// ||U^dagger U - I||_F.
double unitarity_defect(const Matrix& u);

/// A unitary on the degenerate subspace (2x2 one qubit, 4x4 two qubits).
/// The constructor rejects matrices whose unitarity defect exceeds `tol`.
class GateMatrix {
 public:
  explicit GateMatrix(Matrix u, double tol = kUnitaryTol);

  const Matrix& matrix() const { return u_; }
  operator const Matrix&() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

 private:
  Matrix u_;
};

/// Unitary exponential of an anti-Hermitian matrix. 2x2 inputs use the
/// closed form through the Pauli decomposition; larger dimensions use
/// scaling-and-squaring around a fixed-order Taylor core. Throws
/// std::invalid_argument if the skew defect of `m` exceeds kSkewTol.
GateMatrix mat_exp_antihermitian(const Matrix& m);

/// Frobenius distance ||A - B||_F with ||A||_F = sqrt(Tr(A^dagger A)).
double frob_dist(const Matrix& a, const Matrix& b);

/// Kronecker product, row-major convention:
/// (A kron B)[i*rows(B)+k, j*cols(B)+l] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

namespace detail {

// Fixed-size kernels shared with the holonomy hot loop.
Eigen::Matrix2cd exp_antihermitian_2(const Eigen::Matrix2cd& m);
Eigen::Matrix4cd exp_antihermitian_4(const Eigen::Matrix4cd& m);

}  // namespace detail

}  // namespace hqc
