#pragma once

#include "marginreg/geometry.hpp"

#include <cstdint>
#include <vector>

namespace marginreg {

/// Greedy farthest-point sampling over a point set. The first pick is drawn
/// from the seeded generator; every later pick maximizes the minimum distance
/// to the already-selected set (ties to the lowest index). Returns at most
/// min(count, points.size()) indices in selection order.
std::vector<int> farthest_point_sample(const std::vector<Point3>& points, int count,
                                       std::uint64_t seed);

}  // namespace marginreg
