#include "mdisk/intersect.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace mdisk {

namespace {

constexpr double kRelEps = 1e-12;

// Signed distances of p's vertices to the plane of q, with tiny values snapped to 0.
std::array<double, 3> plane_distances(const Triangle& p, const Triangle& q,
                                      const Eigen::Vector3d& nq, double scale) {
  std::array<double, 3> d{};
  const double eps = kRelEps * nq.norm() * scale;
  for (int i = 0; i < 3; ++i) {
    d[static_cast<size_t>(i)] = nq.dot(p[static_cast<size_t>(i)] - q[0]);
    if (std::abs(d[static_cast<size_t>(i)]) <= eps) d[static_cast<size_t>(i)] = 0.0;
  }
  return d;
}

bool same_side(const std::array<double, 3>& d) {
  return (d[0] > 0 && d[1] > 0 && d[2] > 0) || (d[0] < 0 && d[1] < 0 && d[2] < 0);
}

// Interval cut by the other plane on the line direction, projected on axis k.
std::pair<double, double> line_interval(const Triangle& t, const std::array<double, 3>& d, int k) {
  double lo = INFINITY, hi = -INFINITY;
  auto take = [&](double s) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  };
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const double di = d[static_cast<size_t>(i)], dj = d[static_cast<size_t>(j)];
    const double pi = t[static_cast<size_t>(i)][k], pj = t[static_cast<size_t>(j)][k];
    if (di == 0.0) take(pi);
    if ((di < 0 && dj > 0) || (di > 0 && dj < 0)) take(pi + (pj - pi) * di / (di - dj));
  }
  return {lo, hi};
}

double orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

bool on_segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                        const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
  const double o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const double o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool point_in_triangle(const Eigen::Vector2d& p, const std::array<Eigen::Vector2d, 3>& t) {
  const double d1 = orient2d(t[0], t[1], p), d2 = orient2d(t[1], t[2], p),
               d3 = orient2d(t[2], t[0], p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

bool coplanar_intersect(const Triangle& p, const Triangle& q, const Eigen::Vector3d& n) {
  int drop = 0;
  n.cwiseAbs().maxCoeff(&drop);
  const int i0 = (drop + 1) % 3, i1 = (drop + 2) % 3;
  std::array<Eigen::Vector2d, 3> a, b;
  for (size_t k = 0; k < 3; ++k) {
    a[k] = {p[k][i0], p[k][i1]};
    b[k] = {q[k][i0], q[k][i1]};
  }
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      if (segments_intersect(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return true;
    }
  }
  return point_in_triangle(a[0], b) || point_in_triangle(b[0], a);
}

}  // namespace

bool triangles_intersect(const Triangle& p, const Triangle& q) {
  const double scale = std::max({(p[1] - p[0]).norm(), (p[2] - p[0]).norm(),
                                  (q[1] - q[0]).norm(), (q[2] - q[0]).norm()});
  const Eigen::Vector3d nq = (q[1] - q[0]).cross(q[2] - q[0]);
  const auto dp = plane_distances(p, q, nq, scale);
  if (same_side(dp)) return false;
  const Eigen::Vector3d np = (p[1] - p[0]).cross(p[2] - p[0]);
  const auto dq = plane_distances(q, p, np, scale);
  if (same_side(dq)) return false;

  if (dp[0] == 0.0 && dp[1] == 0.0 && dp[2] == 0.0) return coplanar_intersect(p, q, nq);

  const Eigen::Vector3d dir = np.cross(nq);
  int k = 0;
  dir.cwiseAbs().maxCoeff(&k);
  const auto [p_lo, p_hi] = line_interval(p, dp, k);
  const auto [q_lo, q_hi] = line_interval(q, dq, k);
  return std::max(p_lo, q_lo) <= std::min(p_hi, q_hi);
}

SelfIntersectionResult find_self_intersections(const SurfaceMesh& mesh, size_t keep_pairs) {
  SelfIntersectionResult result;
  const size_t nt = mesh.triangles.size();
  if (nt < 2) return result;

  std::vector<Triangle> tris(nt);
  std::vector<Eigen::AlignedBox3d> boxes(nt);
  std::vector<char> usable(nt, 1);
  std::vector<double> extents;
  extents.reserve(nt);
  for (size_t t = 0; t < nt; ++t) {
    for (size_t k = 0; k < 3; ++k) {
      tris[t][k] = mesh.vertices[static_cast<size_t>(mesh.triangles[t][k])].position;
      boxes[t].extend(tris[t][k]);
    }
    const double ext = boxes[t].sizes().maxCoeff();
    const double area = 0.5 * (tris[t][1] - tris[t][0]).cross(tris[t][2] - tris[t][0]).norm();
    if (!(area > 1e-14 * ext * ext) || !std::isfinite(area)) {
      usable[t] = 0;
      ++result.degenerate;
      continue;
    }
    extents.push_back(ext);
  }
  if (extents.empty()) return result;
  std::nth_element(extents.begin(), extents.begin() + static_cast<long>(extents.size() / 2),
                   extents.end());
  const double cell = std::max(2.0 * extents[extents.size() / 2], 1e-12);

  Eigen::AlignedBox3d all;
  for (size_t t = 0; t < nt; ++t) {
    if (usable[t]) all.extend(boxes[t]);
  }
  auto cell_of = [&](const Eigen::Vector3d& p) {
    return Eigen::Vector3i(((p - all.min()) / cell).array().floor().cast<int>());
  };
  auto key = [](const Eigen::Vector3i& c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x())) << 42) ^
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y())) << 21) ^
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.z()));
  };

  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (size_t t = 0; t < nt; ++t) {
    if (!usable[t]) continue;
    const Eigen::Vector3i lo = cell_of(boxes[t].min()), hi = cell_of(boxes[t].max());
    for (int i = lo.x(); i <= hi.x(); ++i)
      for (int j = lo.y(); j <= hi.y(); ++j)
        for (int k = lo.z(); k <= hi.z(); ++k) buckets[key({i, j, k})].push_back(static_cast<int>(t));
  }

  auto share_vertex = [&](int a, int b) {
    for (int u : mesh.triangles[static_cast<size_t>(a)])
      for (int v : mesh.triangles[static_cast<size_t>(b)])
        if (u == v) return true;
    return false;
  };

  std::vector<std::pair<int, int>> hits;
  for (const auto& [cell_key, members] : buckets) {
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        const int a = members[i], b = members[j];
        const auto& ba = boxes[static_cast<size_t>(a)];
        const auto& bb = boxes[static_cast<size_t>(b)];
        if (!ba.intersects(bb)) continue;
        // Test each pair once: in the cell holding the overlap box's min corner.
        const Eigen::Vector3d corner = ba.min().cwiseMax(bb.min());
        if (key(cell_of(corner)) != cell_key) continue;
        if (share_vertex(a, b)) continue;
        ++result.tested;
        if (triangles_intersect(tris[static_cast<size_t>(a)], tris[static_cast<size_t>(b)])) {
          hits.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  result.intersecting = hits.size();
  hits.resize(std::min(hits.size(), keep_pairs));
  result.pairs = std::move(hits);
  return result;
}

}  // namespace mdisk
