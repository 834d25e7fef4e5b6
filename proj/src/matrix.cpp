#include "hqc/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hqc {

double skew_defect(const Matrix& m) {
  return (m + m.adjoint()).norm();
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

GateMatrix::GateMatrix(Matrix u, double tol) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) {
    throw std::invalid_argument("GateMatrix: matrix must be square");
  }
  const double defect = unitarity_defect(u_);
  if (!(defect <= tol)) {
    throw std::invalid_argument("GateMatrix: unitarity defect " +
                                std::to_string(defect) + " exceeds tolerance");
  }
}

namespace detail {

Eigen::Matrix2cd exp_antihermitian_2(const Eigen::Matrix2cd& m) {
  // m = i h with h Hermitian; split h into a0 I + traceless g, then
  // exp(i h) = e^{i a0} (cos r I + i sin(r)/r g) with r^2 = -det(g).
  const Complex i(0.0, 1.0);
  const double a0 = 0.5 * (m(0, 0).imag() + m(1, 1).imag());
  const double gz = 0.5 * (m(0, 0).imag() - m(1, 1).imag());
  const Complex gx = -i * m(0, 1);  // g(0,1)
  const double r = std::sqrt(gz * gz + std::norm(gx));
  double sinc;
  if (r < 1e-8) {
    sinc = 1.0 - r * r / 6.0;
  } else {
    sinc = std::sin(r) / r;
  }
  const double cr = std::cos(r);
  const Complex phase = std::polar(1.0, a0);
  Eigen::Matrix2cd out;
  out(0, 0) = phase * (cr + i * sinc * gz);
  out(1, 1) = phase * (cr - i * sinc * gz);
  out(0, 1) = phase * (i * sinc * gx);
  out(1, 0) = phase * (i * sinc * std::conj(gx));
  return out;
}

namespace {

// Scaling-and-squaring around a degree-12 Taylor core evaluated in
// Paterson-Stockmeyer form (5 multiplies instead of 12). Exponents here
// have norms well below 1, so the scaling step rarely triggers.
template <typename Mat>
Mat exp_taylor_scaled(const Mat& m) {
  // 1/k! for k = 0..12.
  static constexpr double c[13] = {
      1.0,
      1.0,
      1.0 / 2,
      1.0 / 6,
      1.0 / 24,
      1.0 / 120,
      1.0 / 720,
      1.0 / 5040,
      1.0 / 40320,
      1.0 / 362880,
      1.0 / 3628800,
      1.0 / 39916800,
      1.0 / 479001600};
  // Scale to norm <= 0.25: degree-12 truncation is then ~2e-18, keeping the
  // unitarity defect of products of thousands of step factors under 1e-12.
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  double scale = 1.0;
  if (norm > 0.25) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    scale = std::ldexp(1.0, -squarings);
  }
  const Mat id = Mat::Identity(m.rows(), m.cols());
  const Mat a = m * scale;
  const Mat a2 = a * a;
  const Mat a3 = a2 * a;
  const Mat a4 = a2 * a2;
  // T12 = B0 + A^4 (B1 + A^4 (B2 + c12 A^4)), cubic chunks B_j.
  const Mat b0 = c[0] * id + c[1] * a + c[2] * a2 + c[3] * a3;
  const Mat b1 = c[4] * id + c[5] * a + c[6] * a2 + c[7] * a3;
  const Mat b2 = c[8] * id + c[9] * a + c[10] * a2 + c[11] * a3;
  Mat result = b0 + a4 * (b1 + a4 * (b2 + c[12] * a4));
  for (int s = 0; s < squarings; ++s) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace

Eigen::Matrix4cd exp_antihermitian_4(const Eigen::Matrix4cd& m) {
  return exp_taylor_scaled(m);
}

}  // namespace detail

GateMatrix mat_exp_antihermitian(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("mat_exp_antihermitian: matrix must be square");
  }
  const double defect = skew_defect(m);
  if (!(defect <= kSkewTol)) {
    throw std::invalid_argument(
        "mat_exp_antihermitian: input is not anti-Hermitian (defect " +
        std::to_string(defect) + "); connection evaluation is suspect");
  }
  if (m.rows() == 2) {
    Eigen::Matrix2cd fixed = m;
    return GateMatrix(detail::exp_antihermitian_2(fixed));
  }
  return GateMatrix(detail::exp_taylor_scaled<Matrix>(m));
}

double frob_dist(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frob_dist: dimension mismatch");
  }
  return (a - b).norm();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace hqc
