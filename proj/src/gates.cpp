#include "hqc/gates.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hqc/holonomy.hpp"

namespace hqc {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kImag(0.0, 1.0);

void require_finite_param(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("GateSpec: non-finite ") + what);
  }
}

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Matrix exp_i_sigma_z(double a) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, a);
  m(1, 1) = std::polar(1.0, -a);
  return m;
}

Matrix exp_i_sigma_y(double b) {
  Matrix m(2, 2);
  m << std::cos(b), std::sin(b), -std::sin(b), std::cos(b);
  return m;
}

}  // namespace

GateSpec GateSpec::identity(System s) {
  return GateSpec(GateKind::Identity, s, "identity");
}

GateSpec GateSpec::hadamard() {
  return GateSpec(GateKind::Hadamard, System::OneQubit, "hadamard");
}

GateSpec GateSpec::pi8() {
  return GateSpec(GateKind::Pi8, System::OneQubit, "pi8");
}

GateSpec GateSpec::phase(double delta) {
  require_finite_param(delta, "phase angle");
  GateSpec g(GateKind::Phase, System::OneQubit,
             "phase(" + fmt_param(delta) + ")");
  g.params_[0] = delta;
  return g;
}

GateSpec GateSpec::su2(double delta, double a, double b, double c) {
  require_finite_param(delta, "su2 delta");
  require_finite_param(a, "su2 a");
  require_finite_param(b, "su2 b");
  require_finite_param(c, "su2 c");
  GateSpec g(GateKind::Su2, System::OneQubit,
             "su2(" + fmt_param(delta) + "," + fmt_param(a) + "," +
                 fmt_param(b) + "," + fmt_param(c) + ")");
  g.params_[0] = delta;
  g.params_[1] = a;
  g.params_[2] = b;
  g.params_[3] = c;
  return g;
}

GateSpec GateSpec::cnot() {
  return GateSpec(GateKind::Cnot, System::TwoQubit, "cnot");
}

GateSpec GateSpec::swap() {
  return GateSpec(GateKind::Swap, System::TwoQubit, "swap");
}

GateSpec GateSpec::controlled_phase(double theta) {
  require_finite_param(theta, "controlled-phase angle");
  GateSpec g(GateKind::ControlledPhase, System::TwoQubit,
             "cphase(" + fmt_param(theta) + ")");
  g.params_[0] = theta;
  return g;
}

GateSpec GateSpec::qft2() {
  return GateSpec(GateKind::Qft2, System::TwoQubit, "qft2");
}

GateSpec GateSpec::custom(Matrix m, std::string name) {
  System s;
  if (m.rows() == 2 && m.cols() == 2) {
    s = System::OneQubit;
  } else if (m.rows() == 4 && m.cols() == 4) {
    s = System::TwoQubit;
  } else {
    throw std::invalid_argument("GateSpec::custom: matrix must be 2x2 or 4x4");
  }
  if (unitarity_defect(m) > 1e-10) {
    throw std::invalid_argument(
        "GateSpec::custom: matrix is not unitary (defect > 1e-10)");
  }
  GateSpec g(GateKind::Custom, s, std::move(name));
  g.custom_ = std::move(m);
  return g;
}

GateMatrix gate_matrix(const GateSpec& spec) {
  switch (spec.kind()) {
    case GateKind::Identity:
      return GateMatrix(
          Matrix::Identity(gate_dim(spec.system()), gate_dim(spec.system())));
    case GateKind::Hadamard: {
      Matrix h(2, 2);
      h << 1, 1, 1, -1;
      return GateMatrix(h / std::numbers::sqrt2);
    }
    case GateKind::Pi8: {
      Matrix m = Matrix::Identity(2, 2);
      m(1, 1) = std::polar(1.0, kPi / 8);
      return GateMatrix(m);
    }
    case GateKind::Phase:
      return GateMatrix(std::polar(1.0, spec.angle()) *
                        Matrix::Identity(2, 2));
    case GateKind::Su2:
      return GateMatrix(std::polar(1.0, spec.su2_delta()) *
                        exp_i_sigma_z(spec.su2_a()) *
                        exp_i_sigma_y(spec.su2_b()) *
                        exp_i_sigma_z(spec.su2_c()));
    case GateKind::Cnot: {
      Matrix m = Matrix::Identity(4, 4);
      m(2, 2) = 0;
      m(3, 3) = 0;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return GateMatrix(m);
    }
    case GateKind::Swap: {
      Matrix m = Matrix::Identity(4, 4);
      m(1, 1) = 0;
      m(2, 2) = 0;
      m(1, 2) = 1;
      m(2, 1) = 1;
      return GateMatrix(m);
    }
    case GateKind::ControlledPhase: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = std::polar(1.0, spec.angle());
      return GateMatrix(m);
    }
    case GateKind::Qft2: {
      // omega = i, so omega^(r*c) cycles through {1, i, -1, -i}.
      const Complex cycle[4] = {Complex(1, 0), kImag, Complex(-1, 0), -kImag};
      Matrix m(4, 4);
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          m(r, c) = 0.5 * cycle[(r * c) % 4];
        }
      }
      return GateMatrix(m);
    }
    case GateKind::Custom:
      return GateMatrix(spec.custom_matrix(), 1e-10);
  }
  throw std::logic_error("gate_matrix: unhandled gate kind");
}

PolygonalLoop rotation_y_loop(double beta) {
  require_finite_param(beta, "rotation angle");
  return make_loop(System::OneQubit, {},
                   {{0, kPi / 2, 0, 0}, {beta, kPi / 2, 0, 0}, {beta, 0, 0, 0}});
}

PolygonalLoop rotation_z_loop(double alpha) {
  require_finite_param(alpha, "rotation angle");
  return make_loop(System::OneQubit, {},
                   {{kPi / 2, 0, 0, 0},
                    {kPi / 2, kPi / 2, 0, 0},
                    {kPi / 2, kPi / 2, alpha, 0},
                    {kPi / 2, 0, alpha, 0},
                    {0, 0, alpha, 0}});
}

PolygonalLoop global_phase_loop(double delta) {
  require_finite_param(delta, "phase angle");
  return make_loop(System::OneQubit, {},
                   {{0, kPi / 2, 0, 0},
                    {0, kPi / 2, 0, delta},
                    {0, 0, 0, delta},
                    {0, 0, 0, 0},
                    {kPi / 2, 0, 0, 0},
                    {kPi / 2, 0, delta, 0},
                    {0, 0, delta, 0}});
}

PolygonalLoop controlled_phase_loop(double theta) {
  require_finite_param(theta, "controlled-phase angle");
  return make_loop(System::TwoQubit, {},
                   {{0, kPi / 2, 0, 0, 0, 0, 0, 0, 0},
                    {0, kPi / 2, 0, 0, 0, 0, 0, 0, theta},
                    {0, 0, 0, 0, 0, 0, 0, 0, theta}});
}

PolygonalLoop analytic_hadamard_exact() {
  return concat(concat(rotation_y_loop(kPi / 4), rotation_z_loop(kPi / 2)),
                global_phase_loop(-kPi / 2));
}

PolygonalLoop analytic_loop(const GateSpec& spec) {
  switch (spec.kind()) {
    case GateKind::Identity: {
      // Out-and-back spur along theta1 at theta2 = 0, where every moved
      // coordinate has a vanishing connection component.
      if (spec.system() == System::OneQubit) {
        return make_loop(System::OneQubit, {}, {{kPi / 2, 0, 0, 0}});
      }
      return make_loop(System::TwoQubit, {},
                       {{kPi / 2, 0, 0, 0, 0, 0, 0, 0, 0}});
    }
    case GateKind::Pi8:
      return make_loop(
          System::OneQubit, {},
          {{0, kPi / 2, 0, 0}, {0, kPi / 2, 0, kPi / 8}, {0, 0, 0, kPi / 8}});
    case GateKind::Phase:
      return global_phase_loop(spec.angle());
    case GateKind::Su2: {
      // Rightmost factor acts first, so its loop comes first.
      std::vector<PolygonalLoop> parts;
      if (spec.su2_c() != 0) {
        parts.push_back(rotation_z_loop(spec.su2_c()));
      }
      if (spec.su2_b() != 0) {
        parts.push_back(rotation_y_loop(spec.su2_b()));
      }
      if (spec.su2_a() != 0) {
        parts.push_back(rotation_z_loop(spec.su2_a()));
      }
      if (spec.su2_delta() != 0) {
        parts.push_back(global_phase_loop(spec.su2_delta()));
      }
      if (parts.empty()) {
        return analytic_loop(GateSpec::identity(System::OneQubit));
      }
      PolygonalLoop out = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        out = concat(out, parts[i]);
      }
      return out;
    }
    case GateKind::Hadamard:
      return concat(rotation_y_loop(kPi / 4), rotation_z_loop(kPi / 2));
    case GateKind::ControlledPhase:
      return controlled_phase_loop(spec.angle());
    default:
      throw std::invalid_argument(
          "analytic_loop: no analytic construction for gate '" + spec.name() +
          "'");
  }
}

}  // namespace hqc
