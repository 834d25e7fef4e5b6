#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "hqc/gates.hpp"
#include "hqc/matrix.hpp"

using hqc::Complex;
using hqc::GateSpec;
using hqc::Matrix;
using hqc::System;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
}  // namespace

TEST_CASE("single-qubit gate matrices", "[gates]") {
  const Matrix h = hqc::gate_matrix(GateSpec::hadamard());
  CHECK(std::abs(h(0, 0) - 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(h(1, 1) + 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(hqc::frob_dist(h * h, Matrix::Identity(2, 2)) < 1e-15);

  const Matrix t = hqc::gate_matrix(GateSpec::pi8());
  CHECK(t(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(t(1, 1) - std::polar(1.0, kPi / 8)) < 1e-16);
  CHECK(t(0, 1) == Complex(0.0, 0.0));

  const Matrix p = hqc::gate_matrix(GateSpec::phase(0.7));
  CHECK(std::abs(p(0, 0) - std::polar(1.0, 0.7)) < 1e-16);
  CHECK(std::abs(p(1, 1) - std::polar(1.0, 0.7)) < 1e-16);

  // su2(0,0,0,0) is the identity; a pure beta angle is the y rotation.
  CHECK(hqc::frob_dist(hqc::gate_matrix(GateSpec::su2(0, 0, 0, 0)),
                       Matrix::Identity(2, 2)) == 0.0);
  const double b = 0.6;
  const Matrix ry = hqc::gate_matrix(GateSpec::su2(0, 0, b, 0));
  CHECK(std::abs(ry(0, 0) - std::cos(b)) < 1e-15);
  CHECK(std::abs(ry(0, 1) - std::sin(b)) < 1e-15);
  CHECK(std::abs(ry(1, 0) + std::sin(b)) < 1e-15);

  // det(e^{i delta} SU(2)) = e^{2 i delta}.
  const Matrix g = hqc::gate_matrix(GateSpec::su2(1.0, kPi / 7, 1.0 / 3, 1.0));
  CHECK(std::abs(g.determinant() - std::polar(1.0, 2.0)) < 1e-14);
  CHECK(hqc::unitarity_defect(g) < 1e-15);
}

TEST_CASE("two-qubit gate matrices", "[gates]") {
  const Matrix cnot = hqc::gate_matrix(GateSpec::cnot());
  Matrix cnot_expect = Matrix::Zero(4, 4);
  cnot_expect(0, 0) = 1;
  cnot_expect(1, 1) = 1;
  cnot_expect(2, 3) = 1;
  cnot_expect(3, 2) = 1;
  CHECK(hqc::frob_dist(cnot, cnot_expect) == 0.0);

  const Matrix swap = hqc::gate_matrix(GateSpec::swap());
  Matrix swap_expect = Matrix::Zero(4, 4);
  swap_expect(0, 0) = 1;
  swap_expect(1, 2) = 1;
  swap_expect(2, 1) = 1;
  swap_expect(3, 3) = 1;
  CHECK(hqc::frob_dist(swap, swap_expect) == 0.0);

  const Matrix cp = hqc::gate_matrix(GateSpec::controlled_phase(kPi));
  CHECK(std::abs(cp(3, 3) - std::polar(1.0, kPi)) < 1e-16);
  CHECK(cp(0, 0) == Complex(1.0, 0.0));

  // Fourier transform on two qubits, omega = i, no bit reversal.
  const Matrix f = hqc::gate_matrix(GateSpec::qft2());
  Matrix f_expect(4, 4);
  f_expect << 1, 1, 1, 1,
              1, kI, -1, -kI,
              1, -1, 1, -1,
              1, -kI, -1, kI;
  f_expect *= 0.5;
  CHECK(hqc::frob_dist(f, f_expect) == 0.0);
  CHECK(hqc::unitarity_defect(f) < 1e-15);

  // F^2 is the index-reversal permutation fixing 0 and 2.
  Matrix rev = Matrix::Zero(4, 4);
  rev(0, 0) = 1;
  rev(1, 3) = 1;
  rev(2, 2) = 1;
  rev(3, 1) = 1;
  CHECK(hqc::frob_dist(f * f, rev) < 1e-15);
}

TEST_CASE("conjugating the controlled phase yields CNOT", "[gates]") {
  const Matrix h = hqc::gate_matrix(GateSpec::hadamard());
  const Matrix ih = hqc::kron(Matrix::Identity(2, 2), h);
  const Matrix u = hqc::gate_matrix(GateSpec::controlled_phase(kPi));
  CHECK(hqc::frob_dist(ih * u * ih, hqc::gate_matrix(GateSpec::cnot())) <
        1e-12);
}

TEST_CASE("gate names and systems", "[gates]") {
  CHECK(GateSpec::phase(0.5).name() == "phase(0.5)");
  CHECK(GateSpec::controlled_phase(kPi).name() == "cphase(3.14159265359)");
  CHECK(GateSpec::su2(1, 0.5, 0.25, -1).name() == "su2(1,0.5,0.25,-1)");
  CHECK(GateSpec::hadamard().system() == System::OneQubit);
  CHECK(GateSpec::qft2().system() == System::TwoQubit);
  CHECK(GateSpec::identity(System::TwoQubit).system() == System::TwoQubit);
  CHECK(hqc::gate_matrix(GateSpec::identity(System::TwoQubit)).dim() == 4);
  CHECK_THROWS_AS(GateSpec::phase(std::nan("")), std::invalid_argument);
}

TEST_CASE("custom gate specs", "[gates]") {
  Matrix u(2, 2);
  u << 0, 1, 1, 0;
  const GateSpec spec = GateSpec::custom(u, "pauli-x");
  CHECK(spec.system() == System::OneQubit);
  CHECK(spec.name() == "pauli-x");
  CHECK(hqc::frob_dist(hqc::gate_matrix(spec), u) == 0.0);

  CHECK_THROWS_AS(GateSpec::custom(2.0 * Matrix::Identity(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSpec::custom(Matrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("analytic construction coverage", "[gates]") {
  CHECK_THROWS_AS(hqc::analytic_loop(GateSpec::cnot()), std::invalid_argument);
  CHECK_THROWS_AS(hqc::analytic_loop(GateSpec::swap()), std::invalid_argument);
  CHECK_THROWS_AS(hqc::analytic_loop(GateSpec::qft2()), std::invalid_argument);
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK_THROWS_AS(hqc::analytic_loop(GateSpec::custom(x)),
                  std::invalid_argument);

  // The all-zero su2 collapses to the identity spur.
  const hqc::PolygonalLoop id_loop =
      hqc::analytic_loop(GateSpec::su2(0, 0, 0, 0));
  CHECK(id_loop.vertex_count() == 1);

  // A pure y rotation re-uses the rectangle construction.
  const hqc::PolygonalLoop ry = hqc::analytic_loop(GateSpec::su2(0, 0, 0.9, 0));
  const hqc::PolygonalLoop rect = hqc::rotation_y_loop(0.9);
  REQUIRE(ry.vertex_count() == rect.vertex_count());
  for (int i = 0; i < ry.vertex_count(); ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(ry.vertex(i)[j] == rect.vertex(i)[j]);
    }
  }

  // Composite loops stay based at the origin and chain through it.
  const hqc::PolygonalLoop had = hqc::analytic_loop(GateSpec::hadamard());
  CHECK(had.vertex_count() == 3 + 1 + 5);  // y rectangle + basepoint + z legs
  for (int j = 0; j < 4; ++j) {
    CHECK(had.basepoint()[j] == 0.0);
  }
}
