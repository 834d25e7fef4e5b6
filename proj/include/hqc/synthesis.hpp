#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hqc/gates.hpp"
#include "hqc/holonomy.hpp"
#include "hqc/loop.hpp"
#include "hqc/nelder_mead.hpp"

namespace hqc {

struct SynthesisConfig {
  int k = 3;
  System system = System::OneQubit;
  int steps_per_edge = 200;
  StepRule rule = StepRule::Midpoint;
  double target_f = 1e-8;
  int max_restarts = 100;
  long max_iterations_per_start = 40000;
  std::uint64_t seed = 1;
  /// Initial vertices drawn uniformly from [-init_range, init_range].
  double init_range = 3.14159265358979323846;
  NelderMeadOptions nm;
  /// Worker threads for restarts; <=0 picks hardware concurrency. Restarts
  /// are scheduled in fixed-size batches so the outcome does not depend on
  /// the thread count.
  int threads = 0;

  int dimension() const { return k * coord_count(system); }
};

struct SynthesisResult {
  PolygonalLoop loop;
  double f_final = 0.0;
  /// Objective at 4x the configured discretization, reported alongside
  /// f_final to expose discretization-artifact optima.
  double f_refined = 0.0;
  bool converged = false;
  int restarts_used = 0;
  long iterations = 0;
  long evaluations = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  /// Best value of each executed restart, in restart order.
  std::vector<double> restart_f;
};

/// Decode a flattened vertex vector (k vertices, coordinate-major) into a
/// loop based at the origin.
PolygonalLoop loop_from_vector(System system, int k, const Eigen::VectorXd& x);

/// f(x) = ||target - holonomy(loop(x))||_F. Bounded by 2 sqrt(dim(target)).
double objective(const Eigen::VectorXd& x, const GateMatrix& target,
                 const SynthesisConfig& cfg);

/// Multi-start Nelder-Mead minimization of the holonomy objective.
/// Restart r draws its initial vertices from a stream derived from
/// (cfg.seed, r), so results are reproducible bit-for-bit and independent
/// of scheduling. Non-convergence (best f above cfg.target_f) is reported
/// through `converged`, not an exception.
SynthesisResult synthesize(const GateMatrix& target, const SynthesisConfig& cfg);
SynthesisResult synthesize(const GateSpec& target, const SynthesisConfig& cfg);

/// f sampled over the affine plane origin + u*axis1 + v*axis2 with u, v on a
/// uniform grid over [0, 1]; entry (i, j) holds f at (u_i, v_j).
Eigen::MatrixXd landscape_section(const GateMatrix& target,
                                  const SynthesisConfig& cfg,
                                  const Eigen::VectorXd& origin,
                                  const Eigen::VectorXd& axis1,
                                  const Eigen::VectorXd& axis2, int grid);

/// Deterministic seed stream: the r-th substream of a master seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t r);

/// Uniform double in [0, 1) from the top 53 bits of the engine output,
/// avoiding the implementation-defined std::uniform_real_distribution.
double uniform_unit(std::mt19937_64& rng);

}  // namespace hqc
