#pragma once

#include <complex>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace hqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Which control manifold a point, loop, or connection lives on.
enum class System { OneQubit, TwoQubit };

/// Number of manifold coordinates: 4 for one qubit, 9 for two qubits.
constexpr int coord_count(System s) { return s == System::OneQubit ? 4 : 9; }

/// Dimension of the degenerate subspace the holonomy acts on: 2 or 4.
constexpr int gate_dim(System s) { return s == System::OneQubit ? 2 : 4; }

// Coordinate order is fixed everywhere: (theta1, theta2, phi1, phi2) for one
// qubit and (theta1_a..phi2_a, theta1_b..phi2_b, xi) for two qubits. Loop
// files, path exports, and flattened optimization vectors all use this order.
std::string_view coordinate_name(System s, int coordinate);

std::string_view system_name(System s);

}  // namespace hqc
