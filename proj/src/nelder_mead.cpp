#include "hqc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hqc {

namespace {

double guarded_eval(const ObjectiveFn& f, const Eigen::VectorXd& x,
                    long& evaluations) {
  ++evaluations;
  const double v = f(x);
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

NelderMeadResult nelder_mead(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) {
    throw std::invalid_argument("nelder_mead: empty start vector");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("nelder_mead: non-finite start vector");
  }
  if (opts.initial_step == 0.0) {
    throw std::invalid_argument("nelder_mead: initial_step must be nonzero");
  }

  double rho = opts.reflection;
  double chi = opts.expansion;
  double gamma = opts.contraction;
  double sigma = opts.shrink;
  if (opts.adaptive) {
    // Dimension-scaled coefficients; plain values degrade above ~20 dims.
    const double nd = static_cast<double>(n);
    chi = 1.0 + 2.0 / nd;
    gamma = 0.75 - 1.0 / (2.0 * nd);
    sigma = 1.0 - 1.0 / nd;
  }

  long evaluations = 0;
  std::vector<Eigen::VectorXd> x(n + 1, x0);
  std::vector<double> fx(n + 1);
  for (int i = 1; i <= n; ++i) {
    x[i](i - 1) += opts.initial_step;
  }
  for (int i = 0; i <= n; ++i) {
    fx[i] = guarded_eval(f, x[i], evaluations);
  }

  std::vector<int> order(n + 1);
  NmStop stop = NmStop::IterationCap;
  long iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fx[a] < fx[b]; });
    const int best = order[0];
    const int worst = order[n];
    const int second_worst = order[n - 1];

    if (fx[best] <= opts.target_f) {
      stop = NmStop::TargetReached;
      break;
    }
    if (fx[worst] - fx[best] < opts.fspread_tol) {
      stop = NmStop::ValuesFlat;
      break;
    }
    double diameter = 0.0;
    for (int i = 0; i <= n; ++i) {
      if (i != best) {
        diameter = std::max(
            diameter, (x[i] - x[best]).lpNorm<Eigen::Infinity>());
      }
    }
    if (diameter < opts.diameter_tol) {
      stop = NmStop::SimplexCollapsed;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) {
        centroid += x[i];
      }
    }
    centroid /= static_cast<double>(n);

    bool shrink = false;
    const Eigen::VectorXd xr = centroid + rho * (centroid - x[worst]);
    const double fr = guarded_eval(f, xr, evaluations);
    if (fr < fx[best]) {
      const Eigen::VectorXd xe = centroid + chi * (xr - centroid);
      const double fe = guarded_eval(f, xe, evaluations);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
    } else if (fr < fx[second_worst]) {
      x[worst] = xr;
      fx[worst] = fr;
    } else if (fr < fx[worst]) {
      const Eigen::VectorXd xc = centroid + gamma * (xr - centroid);
      const double fc = guarded_eval(f, xc, evaluations);
      if (fc <= fr) {
        x[worst] = xc;
        fx[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      const Eigen::VectorXd xc = centroid - gamma * (centroid - x[worst]);
      const double fc = guarded_eval(f, xc, evaluations);
      if (fc < fx[worst]) {
        x[worst] = xc;
        fx[worst] = fc;
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      for (int i = 0; i <= n; ++i) {
        if (i != best) {
          x[i] = x[best] + sigma * (x[i] - x[best]);
          fx[i] = guarded_eval(f, x[i], evaluations);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (fx[i] < fx[best]) {
      best = i;
    }
  }
  NelderMeadResult result;
  result.x = x[best];
  result.f = fx[best];
  result.iterations = iter;
  result.evaluations = evaluations;
  result.stop = stop;
  return result;
}

}  // namespace hqc
