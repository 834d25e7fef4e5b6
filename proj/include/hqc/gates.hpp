#pragma once

#include <string>

#include "hqc/loop.hpp"
#include "hqc/matrix.hpp"
#include "hqc/system.hpp"

namespace hqc {

enum class GateKind {
  Identity,
  Hadamard,
  Pi8,
  Phase,            // global phase e^{i delta} I2
  Su2,              // e^{i delta} exp(i a sz) exp(i b sy) exp(i c sz)
  Cnot,
  Swap,
  ControlledPhase,  // diag(1,1,1,e^{i theta})
  Qft2,
  Custom,
};

/// A named target gate, possibly parameterized.
class GateSpec {
 public:
  static GateSpec identity(System s);
  static GateSpec hadamard();
  static GateSpec pi8();
  static GateSpec phase(double delta);
  static GateSpec su2(double delta, double a, double b, double c);
  static GateSpec cnot();
  static GateSpec swap();
  static GateSpec controlled_phase(double theta);
  static GateSpec qft2();
  /// Custom target; must be 2x2 or 4x4 and unitary to 1e-10.
  static GateSpec custom(Matrix m, std::string name = "custom");

  GateKind kind() const { return kind_; }
  System system() const { return system_; }
  const std::string& name() const { return name_; }

  double angle() const { return params_[0]; }                  // Phase / ControlledPhase
  double su2_delta() const { return params_[0]; }
  double su2_a() const { return params_[1]; }
  double su2_b() const { return params_[2]; }
  double su2_c() const { return params_[3]; }
  const Matrix& custom_matrix() const { return custom_; }

 private:
  GateSpec(GateKind kind, System system, std::string name)
      : kind_(kind), system_(system), name_(std::move(name)) {}
  GateKind kind_;
  System system_;
  std::string name_;
  double params_[4] = {0, 0, 0, 0};
  Matrix custom_;
};

/// Target matrix of a spec. Two-qubit basis order {|00>,|01>,|10>,|11>}.
/// QFT2 convention: omega = i, no bit reversal, no global phase; the
/// objective is phase-sensitive, so this choice is part of the target.
GateMatrix gate_matrix(const GateSpec& spec);

/// Loops whose piecewise-constant connection legs realize a gate exactly:
/// pi8, phase(delta), su2 (one axis-rectangle per nonzero factor),
/// hadamard, controlled-phase(theta). The hadamard route carries the
/// e^{i pi/2} surplus of the z(pi/2) o y(pi/4) decomposition; see
/// analytic_hadamard_exact for the phase-corrected variant. Throws
/// std::invalid_argument for specs with no analytic construction
/// (cnot, swap, qft2, custom).
PolygonalLoop analytic_loop(const GateSpec& spec);

/// Rectangle in (theta2, theta1) whose holonomy is exp(i beta sigma_y).
PolygonalLoop rotation_y_loop(double beta);

/// Six-leg loop in (theta1, theta2, phi1) whose holonomy is exp(i alpha sigma_z).
PolygonalLoop rotation_z_loop(double alpha);

/// Eight-leg sequence through the (theta2,phi2) then (theta1,phi1) planes
/// whose holonomy is the global phase e^{i delta} I2.
PolygonalLoop global_phase_loop(double delta);

/// Rectangle in (theta2_a, xi) whose holonomy is exp(i theta |11><11|).
PolygonalLoop controlled_phase_loop(double theta);

/// Hadamard composite with the global-phase legs appended so the holonomy
/// equals H exactly rather than e^{i pi/2} H.
PolygonalLoop analytic_hadamard_exact();

}  // namespace hqc
