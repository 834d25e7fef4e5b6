#pragma once

#include <utility>
#include <vector>

#include "hqc/connection.hpp"
#include "hqc/loop.hpp"
#include "hqc/matrix.hpp"

namespace hqc {

struct HolonomyConfig {
  int steps_per_edge = 200;
  StepRule rule = StepRule::Midpoint;
};

/// Holonomy of a loop: the ordered product of step exponentials
///   U = exp(-A(p_n) . dg_n) ... exp(-A(p_1) . dg_1),
/// later steps multiplying from the LEFT. Unitary to 1e-12.
GateMatrix holonomy(const PolygonalLoop& loop, const ConnectionField& field,
                    const HolonomyConfig& cfg = {});

/// Loop traversing `first`, returning to the basepoint, then `second`.
/// holonomy(concat(a, b)) = holonomy(b) * holonomy(a).
PolygonalLoop concat(const PolygonalLoop& first, const PolygonalLoop& second);

/// Self-convergence table: frob_dist of the holonomy at each entry of
/// `steps` (ascending) to the holonomy at the finest entry.
std::vector<std::pair<int, double>> convergence_probe(
    const PolygonalLoop& loop, const ConnectionField& field,
    const std::vector<int>& steps, StepRule rule = StepRule::Midpoint);

}  // namespace hqc
