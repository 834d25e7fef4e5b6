#pragma once

#include <functional>

#include <Eigen/Dense>

namespace hqc {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Scale the coefficients with dimension (helps above ~20 dims).
  bool adaptive = false;
  /// Initial simplex: x0 plus this absolute displacement per coordinate.
  double initial_step = 0.1;
  long max_iterations = 100000;
  /// Stop once the best value reaches this level.
  double target_f = 0.0;
  /// Stop when the simplex diameter shrinks below this.
  double diameter_tol = 1e-12;
  /// Stop when max-min of the simplex values shrinks below this.
  double fspread_tol = 1e-15;
};

enum class NmStop { TargetReached, SimplexCollapsed, ValuesFlat, IterationCap };

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  long iterations = 0;
  long evaluations = 0;
  NmStop stop = NmStop::IterationCap;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

/// Derivative-free simplex descent. Never increases the best value; the
/// result satisfies f <= f(x0).
NelderMeadResult nelder_mead(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts = {});

}  // namespace hqc
