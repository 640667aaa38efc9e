#pragma once

#include "mdisk/mesh.hpp"

#include <Eigen/Core>

#include <array>
#include <utility>
#include <vector>

namespace mdisk {

using Triangle = std::array<Eigen::Vector3d, 3>;

/// Closed triangle-triangle intersection test (touching counts), including
/// the coplanar case.
bool triangles_intersect(const Triangle& p, const Triangle& q);

struct SelfIntersectionResult {
  std::vector<std::pair<int, int>> pairs;  // first few intersecting triangle pairs
  size_t intersecting = 0;
  size_t degenerate = 0;  // zero-area triangles, excluded from pair tests
  size_t tested = 0;      // narrow-phase tests performed
};

/// Tests all pairs of triangles sharing no vertex, using a uniform hash grid
/// over triangle bounding boxes as the broad phase.
SelfIntersectionResult find_self_intersections(const SurfaceMesh& mesh, size_t keep_pairs = 16);

}  // namespace mdisk
