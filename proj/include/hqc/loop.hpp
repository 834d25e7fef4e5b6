#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqc/system.hpp"

namespace hqc {

/// Closed polygonal loop in parameter space: basepoint -> v_1 -> ... -> v_k
/// -> basepoint along straight segments, k+1 edges total. Immutable after
/// construction; all coordinates must be finite.
class PolygonalLoop {
 public:
  /// Basepoint defaults to the origin when empty. `vertices` is flattened,
  /// k * coord_count(system) values in coordinate order.
  PolygonalLoop(System system, std::vector<double> basepoint,
                std::vector<double> vertices);

  System system() const { return system_; }
  int dim() const { return coord_count(system_); }
  int vertex_count() const { return static_cast<int>(vertices_.size()) / dim(); }
  int edge_count() const { return vertex_count() + 1; }

  std::span<const double> basepoint() const { return basepoint_; }
  std::span<const double> vertex(int i) const;
  std::span<const double> flat_vertices() const { return vertices_; }

 private:
  System system_;
  std::vector<double> basepoint_;
  std::vector<double> vertices_;
};

/// Build a loop from per-vertex coordinate lists, validating dimensions.
PolygonalLoop make_loop(System system, std::vector<double> basepoint,
                        const std::vector<std::vector<double>>& vertices);

/// Where the connection is sampled within each sub-segment.
enum class StepRule { Midpoint, LeftEndpoint };

/// Ordered list of (evaluation point, coordinate increment) pairs covering
/// the whole loop; steps_per_edge entries per edge, increments summing to
/// zero over the loop.
class DiscretizedPath {
 public:
  DiscretizedPath(int dim, std::size_t count);

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::span<const double> point(std::size_t i) const { return {points_.data() + i * dim_, static_cast<std::size_t>(dim_)}; }
  std::span<const double> step(std::size_t i) const { return {steps_.data() + i * dim_, static_cast<std::size_t>(dim_)}; }

  double* mutable_point(std::size_t i) { return points_.data() + i * dim_; }
  double* mutable_step(std::size_t i) { return steps_.data() + i * dim_; }

 private:
  int dim_;
  std::size_t count_;
  std::vector<double> points_;
  std::vector<double> steps_;
};

/// Split every edge into steps_per_edge uniform sub-segments. Sub-points are
/// anchored multiplicatively at the true edge endpoints, so doubling
/// steps_per_edge revisits the coarser sub-point lattice exactly.
DiscretizedPath discretize(const PolygonalLoop& loop, int steps_per_edge,
                           StepRule rule = StepRule::Midpoint);

/// Same loop traversed backwards: vertices reversed, basepoint kept.
PolygonalLoop reverse(const PolygonalLoop& loop);

/// Error raised by the loop file parser, carrying source and line context.
class LoopFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optional metadata block stored alongside a loop. Everything here is
/// deterministic given (seed, config), keeping saved files byte-stable.
struct LoopMetadata {
  std::optional<std::string> gate;
  std::optional<double> f_final;
  std::optional<double> f_refined;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<long> iterations;
};

struct LoadedLoop {
  PolygonalLoop loop;
  LoopMetadata meta;
};

// Text format documented in docs/loop-format.md. Angles are written with 17
// significant digits so save/load round-trips bit-exactly.
void save_loop(const PolygonalLoop& loop, std::ostream& out,
               const LoopMetadata& meta = {});
void save_loop(const PolygonalLoop& loop, const std::filesystem::path& file,
               const LoopMetadata& meta = {});
LoadedLoop load_loop(std::istream& in, const std::string& source = "<stream>");
LoadedLoop load_loop(const std::filesystem::path& file);

/// Tab-separated coordinate trace for plotting: one row per discretization
/// point, columns in declared coordinate order, one header line.
void write_path_table(const PolygonalLoop& loop, int steps_per_edge,
                      StepRule rule, std::ostream& out);

}  // namespace hqc
