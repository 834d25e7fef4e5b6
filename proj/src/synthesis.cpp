#include "hqc/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hqc {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t r) {
  // splitmix64 finalizer over golden-ratio strides: adjacent master seeds
  // and adjacent restart indices land in unrelated streams.
  std::uint64_t z = seed + (r + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PolygonalLoop loop_from_vector(System system, int k, const Eigen::VectorXd& x) {
  if (k < 1) {
    throw std::invalid_argument("loop_from_vector: k must be >= 1");
  }
  if (x.size() != static_cast<Eigen::Index>(k) * coord_count(system)) {
    throw std::invalid_argument("loop_from_vector: dimension mismatch");
  }
  return PolygonalLoop(system, {},
                       std::vector<double>(x.data(), x.data() + x.size()));
}

namespace {

/// Restarts are dispatched in fixed batches of this size; convergence is
/// checked only between batches, so the set of executed restarts (and hence
/// the selected result) is independent of the worker-thread count.
constexpr int kRestartBatch = 4;

/// Exploration runs at a quarter of the configured discretization with loose
/// stopping tolerances; only starts that land below this value at the full
/// discretization are re-optimized there.
constexpr double kPromoteThreshold = 0.1;
constexpr double kExploreDiameterTol = 1e-7;
constexpr double kExploreFspreadTol = 1e-10;
constexpr int kPolishRounds = 4;

ConnectionField field_for(System s) {
  return s == System::OneQubit ? ConnectionField::one_qubit()
                               : ConnectionField::two_qubit();
}

void validate_config(const GateMatrix& target, const SynthesisConfig& cfg) {
  if (cfg.k < 1) {
    throw std::invalid_argument("synthesize: k must be >= 1");
  }
  if (cfg.steps_per_edge < 1) {
    throw std::invalid_argument("synthesize: steps_per_edge must be >= 1");
  }
  if (!(cfg.target_f > 0.0)) {
    throw std::invalid_argument("synthesize: target_f must be positive");
  }
  if (cfg.max_restarts < 1) {
    throw std::invalid_argument("synthesize: max_restarts must be >= 1");
  }
  if (cfg.max_iterations_per_start < 1) {
    throw std::invalid_argument(
        "synthesize: max_iterations_per_start must be >= 1");
  }
  if (!(cfg.init_range > 0.0)) {
    throw std::invalid_argument("synthesize: init_range must be positive");
  }
  if (target.dim() != gate_dim(cfg.system)) {
    throw std::invalid_argument(
        "synthesize: target dimension does not match system");
  }
}

struct StartOutcome {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  long iterations = 0;
  long evaluations = 0;
};

StartOutcome run_start(const GateMatrix& target, const SynthesisConfig& cfg,
                       std::uint64_t r) {
  const int dim = cfg.dimension();
  std::mt19937_64 rng(substream_seed(cfg.seed, r));
  Eigen::VectorXd x0(dim);
  for (int i = 0; i < dim; ++i) {
    x0(i) = (2.0 * uniform_unit(rng) - 1.0) * cfg.init_range;
  }

  SynthesisConfig coarse = cfg;
  coarse.steps_per_edge = std::max(25, cfg.steps_per_edge / 4);

  const auto f_coarse = [&](const Eigen::VectorXd& v) {
    return objective(v, target, coarse);
  };
  const auto f_fine = [&](const Eigen::VectorXd& v) {
    return objective(v, target, cfg);
  };

  const bool adaptive = cfg.nm.adaptive || dim >= 20;

  NelderMeadOptions explore = cfg.nm;
  explore.adaptive = adaptive;
  explore.target_f = std::min(1e-9, cfg.target_f);
  explore.diameter_tol = std::max(cfg.nm.diameter_tol, kExploreDiameterTol);
  explore.fspread_tol = std::max(cfg.nm.fspread_tol, kExploreFspreadTol);
  explore.max_iterations =
      std::min<long>(cfg.max_iterations_per_start, 2000 + 300L * dim);

  StartOutcome out;
  NelderMeadResult res = nelder_mead(f_coarse, x0, explore);
  out.iterations = res.iterations;
  out.evaluations = res.evaluations;
  out.x = res.x;
  out.f = f_fine(res.x);
  ++out.evaluations;

  if (out.f >= kPromoteThreshold) {
    return out;
  }

  // Full-resolution polish: fresh simplex descents with shrinking initial
  // step, stopped once the target is hit or a round stops paying off.
  double step = 0.02;
  for (int round = 0; round < kPolishRounds && out.f > cfg.target_f;
       ++round, step *= 0.2) {
    NelderMeadOptions polish = cfg.nm;
    polish.adaptive = adaptive;
    polish.target_f = cfg.target_f;
    polish.initial_step = step;
    polish.max_iterations = cfg.max_iterations_per_start;
    res = nelder_mead(f_fine, out.x, polish);
    out.iterations += res.iterations;
    out.evaluations += res.evaluations;
    const bool stalled = res.f >= 0.5 * out.f;
    if (res.f < out.f) {
      out.f = res.f;
      out.x = res.x;
    }
    if (stalled) {
      break;
    }
  }
  return out;
}

}  // namespace

double objective(const Eigen::VectorXd& x, const GateMatrix& target,
                 const SynthesisConfig& cfg) {
  if (cfg.k < 1) {
    throw std::invalid_argument("objective: k must be >= 1");
  }
  if (x.size() != cfg.dimension()) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  if (target.dim() != gate_dim(cfg.system)) {
    throw std::invalid_argument(
        "objective: target dimension does not match system");
  }
  try {
    const PolygonalLoop loop = loop_from_vector(cfg.system, cfg.k, x);
    const GateMatrix u = holonomy(loop, field_for(cfg.system),
                                  HolonomyConfig{cfg.steps_per_edge, cfg.rule});
    return frob_dist(target.matrix(), u.matrix());
  } catch (const std::invalid_argument&) {
    // Non-finite trial points or rounding-degraded step products evaluate to
    // the largest possible distance, steering descent away instead of
    // aborting a whole multi-start run.
    return 2.0 * std::sqrt(static_cast<double>(gate_dim(cfg.system)));
  }
}

SynthesisResult synthesize(const GateMatrix& target,
                           const SynthesisConfig& cfg) {
  validate_config(target, cfg);
  const auto t_start = std::chrono::steady_clock::now();

  const unsigned hw = std::thread::hardware_concurrency();
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(hw ? hw : 1u);
  threads = std::clamp(threads, 1, kRestartBatch);

  std::vector<StartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(cfg.max_restarts));
  int executed = 0;
  int best_index = -1;

  while (executed < cfg.max_restarts) {
    const int count = std::min(kRestartBatch, cfg.max_restarts - executed);
    const std::size_t base = outcomes.size();
    outcomes.resize(base + count);
    const int workers = std::min(threads, count);
    if (workers <= 1) {
      for (int i = 0; i < count; ++i) {
        outcomes[base + i] =
            run_start(target, cfg, static_cast<std::uint64_t>(executed + i));
      }
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          for (int i = t; i < count; i += workers) {
            outcomes[base + i] = run_start(
                target, cfg, static_cast<std::uint64_t>(executed + i));
          }
        });
      }
      for (std::thread& th : pool) {
        th.join();
      }
    }
    executed += count;
    for (std::size_t i = base; i < outcomes.size(); ++i) {
      if (best_index < 0 ||
          outcomes[i].f < outcomes[static_cast<std::size_t>(best_index)].f) {
        best_index = static_cast<int>(i);
      }
    }
    if (outcomes[static_cast<std::size_t>(best_index)].f <= cfg.target_f) {
      break;
    }
  }

  const StartOutcome& best = outcomes[static_cast<std::size_t>(best_index)];

  SynthesisConfig refined = cfg;
  refined.steps_per_edge = cfg.steps_per_edge * 4;

  long iterations = 0;
  long evaluations = 0;
  std::vector<double> restart_f;
  restart_f.reserve(outcomes.size());
  for (const StartOutcome& o : outcomes) {
    iterations += o.iterations;
    evaluations += o.evaluations;
    restart_f.push_back(o.f);
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();

  return SynthesisResult{loop_from_vector(cfg.system, cfg.k, best.x),
                         best.f,
                         objective(best.x, target, refined),
                         best.f <= cfg.target_f,
                         executed,
                         iterations,
                         evaluations,
                         cfg.seed,
                         wall,
                         std::move(restart_f)};
}

SynthesisResult synthesize(const GateSpec& target, const SynthesisConfig& cfg) {
  if (target.system() != cfg.system) {
    throw std::invalid_argument(
        "synthesize: gate spec system does not match config system");
  }
  return synthesize(gate_matrix(target), cfg);
}

Eigen::MatrixXd landscape_section(const GateMatrix& target,
                                  const SynthesisConfig& cfg,
                                  const Eigen::VectorXd& origin,
                                  const Eigen::VectorXd& axis1,
                                  const Eigen::VectorXd& axis2, int grid) {
  if (grid < 1) {
    throw std::invalid_argument("landscape_section: grid must be >= 1");
  }
  const Eigen::Index dim = cfg.dimension();
  if (origin.size() != dim || axis1.size() != dim || axis2.size() != dim) {
    throw std::invalid_argument("landscape_section: axis dimension mismatch");
  }
  Eigen::MatrixXd out(grid, grid);
  for (int i = 0; i < grid; ++i) {
    const double u = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double v = grid == 1 ? 0.0 : static_cast<double>(j) / (grid - 1);
      out(i, j) = objective(origin + u * axis1 + v * axis2, target, cfg);
    }
  }
  return out;
}

}  // namespace hqc
