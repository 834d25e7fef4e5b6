#include "hqc/holonomy.hpp"

#include <stdexcept>

namespace hqc {

namespace {

Matrix holonomy_one(const DiscretizedPath& path) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Eigen::Matrix2cd m =
        -detail::contracted_one(path.point(i).data(), path.step(i).data());
    u = (detail::exp_antihermitian_2(m) * u).eval();
  }
  return Matrix(u);
}

Matrix holonomy_two(const DiscretizedPath& path) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Eigen::Matrix4cd m =
        -detail::contracted_two(path.point(i).data(), path.step(i).data());
    u = (detail::exp_antihermitian_4(m) * u).eval();
  }
  return Matrix(u);
}

}  // namespace

GateMatrix holonomy(const PolygonalLoop& loop, const ConnectionField& field,
                    const HolonomyConfig& cfg) {
  if (field.system() != loop.system()) {
    throw std::invalid_argument(
        "holonomy: loop and connection field describe different systems");
  }
  const DiscretizedPath path = discretize(loop, cfg.steps_per_edge, cfg.rule);
  if (loop.system() == System::OneQubit) {
    return GateMatrix(holonomy_one(path));
  }
  return GateMatrix(holonomy_two(path));
}

PolygonalLoop concat(const PolygonalLoop& first, const PolygonalLoop& second) {
  if (first.system() != second.system()) {
    throw std::invalid_argument("concat: loops describe different systems");
  }
  const auto bp1 = first.basepoint();
  const auto bp2 = second.basepoint();
  for (int j = 0; j < first.dim(); ++j) {
    if (bp1[j] != bp2[j]) {
      throw std::invalid_argument("concat: loops have different basepoints");
    }
  }
  std::vector<double> flat(first.flat_vertices().begin(),
                           first.flat_vertices().end());
  flat.insert(flat.end(), bp1.begin(), bp1.end());
  flat.insert(flat.end(), second.flat_vertices().begin(),
              second.flat_vertices().end());
  return PolygonalLoop(first.system(),
                       std::vector<double>(bp1.begin(), bp1.end()),
                       std::move(flat));
}

std::vector<std::pair<int, double>> convergence_probe(
    const PolygonalLoop& loop, const ConnectionField& field,
    const std::vector<int>& steps, StepRule rule) {
  if (steps.empty()) {
    throw std::invalid_argument("convergence_probe: empty step list");
  }
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i] <= steps[i - 1]) {
      throw std::invalid_argument(
          "convergence_probe: step counts must be strictly ascending");
    }
  }
  const GateMatrix finest =
      holonomy(loop, field, HolonomyConfig{steps.back(), rule});
  std::vector<std::pair<int, double>> out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const GateMatrix u = holonomy(loop, field, HolonomyConfig{steps[i], rule});
    out.emplace_back(steps[i], frob_dist(u, finest));
  }
  out.emplace_back(steps.back(), 0.0);
  return out;
}

}  // namespace hqc
