#pragma once

#include <span>
#include <vector>

#include "hqc/matrix.hpp"
#include "hqc/model.hpp"
#include "hqc/system.hpp"

namespace hqc {

/// One anti-Hermitian connection component A_i on the degenerate subspace,
/// tagged by the coordinate it differentiates along.
struct ConnectionComponent {
  int coordinate;
  Matrix matrix;
};

/// The connection field of one system: point -> one component per
/// coordinate. Sign convention: components are stored exactly as derived
/// from A_i = <beta|d_i|alpha> and consumed with the exponent -A_i dgamma_i;
/// no sign is absorbed into storage.
///
/// One-qubit basis order (|0>, |1>); two-qubit {|00>,|01>,|10>,|11>}.
/// For qubit-a coordinates the two-qubit component is A kron I2, for
/// qubit-b coordinates I2 kron A, and A_xi = i cos^2(theta2_a)
/// cos^2(theta2_b) |11><11|.
class ConnectionField {
 public:
  static ConnectionField one_qubit() { return ConnectionField(System::OneQubit); }
  static ConnectionField two_qubit() { return ConnectionField(System::TwoQubit); }

  System system() const { return system_; }

  /// All components at `point` (4 or 9 of them, in coordinate order).
  std::vector<ConnectionComponent> components(std::span<const double> point) const;

  /// Contracted step generator sum_i A_i(point) * step[i].
  Matrix contracted(std::span<const double> point, std::span<const double> step) const;

 private:
  explicit ConnectionField(System s) : system_(s) {}
  System system_;
};

/// Central finite difference of the frame columns restricted to the
/// degenerate subspace: W(p)^dagger (W(p+h e_i) - W(p-h e_i)) / (2h).
/// Realizes the defining overlap <beta;p|d_i|alpha;p> with no reference to
/// the analytic formulas, so it serves as their independent check.
/// Requires 1e-8 <= h <= 1e-3.
Matrix connection_fd_oracle(System system, std::span<const double> point,
                            int coordinate, double h = 1e-5);

namespace detail {

// Fixed-size contractions for the holonomy hot loop.
Eigen::Matrix2cd contracted_one(const double* point, const double* step);
Eigen::Matrix4cd contracted_two(const double* point, const double* step);

}  // namespace detail

}  // namespace hqc
