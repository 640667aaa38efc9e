#include "mdisk/intersect.hpp"
#include "mdisk/mesh.hpp"

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mdisk;
using Eigen::Vector3d;

TEST(TriTri, CrossingPair) {
  const Triangle p = {Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(0, 1, 0)};
  const Triangle q = {Vector3d(0.2, 0.2, -1), Vector3d(0.2, 0.2, 1), Vector3d(0.3, 0.3, 1)};
  EXPECT_TRUE(triangles_intersect(p, q));
  EXPECT_TRUE(triangles_intersect(q, p));
}

TEST(TriTri, SeparatedPair) {
  const Triangle p = {Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(0, 1, 0)};
  const Triangle q = {Vector3d(0, 0, 1), Vector3d(1, 0, 1), Vector3d(0, 1, 1)};
  EXPECT_FALSE(triangles_intersect(p, q));
  const Triangle r = {Vector3d(2, 2, -1), Vector3d(2, 2, 1), Vector3d(3, 3, 0)};
  EXPECT_FALSE(triangles_intersect(p, r));
}

TEST(TriTri, TouchingCounts) {
  const Triangle p = {Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(0, 1, 0)};
  const Triangle q = {Vector3d(0.5, 0.5, 0), Vector3d(1, 1, 1), Vector3d(1, 1, -1)};
  EXPECT_TRUE(triangles_intersect(p, q));
}

TEST(TriTri, Coplanar) {
  const Triangle p = {Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(0, 1, 0)};
  const Triangle overlap = {Vector3d(0.2, 0.2, 0), Vector3d(2, 0.2, 0), Vector3d(0.2, 2, 0)};
  const Triangle apart = {Vector3d(2, 2, 0), Vector3d(3, 2, 0), Vector3d(2, 3, 0)};
  const Triangle inside = {Vector3d(0.1, 0.1, 0), Vector3d(0.2, 0.1, 0), Vector3d(0.1, 0.2, 0)};
  EXPECT_TRUE(triangles_intersect(p, overlap));
  EXPECT_FALSE(triangles_intersect(p, apart));
  EXPECT_TRUE(triangles_intersect(p, inside));
  EXPECT_TRUE(triangles_intersect(inside, p));
}

TEST(TriTri, AgreesWithBruteForceSampling) {
  // Random small triangles: whenever a segment-sampling probe finds contact, the exact test must too.
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto rand_tri = [&] { return Triangle{Vector3d(u(rng), u(rng), u(rng)), Vector3d(u(rng), u(rng), u(rng)),
                                        Vector3d(u(rng), u(rng), u(rng))}; };
  auto edge_hits = [](const Triangle& t, const Triangle& s) {
    const Vector3d n = (t[1] - t[0]).cross(t[2] - t[0]);
    for (int e = 0; e < 3; ++e) {
      const Vector3d a = s[e], b = s[(e + 1) % 3];
      const double da = n.dot(a - t[0]), db = n.dot(b - t[0]);
      if (da * db > 0 || da == db) continue;
      const Vector3d x = a + (b - a) * (da / (da - db));
      const Vector3d c0 = (t[1] - t[0]).cross(x - t[0]), c1 = (t[2] - t[1]).cross(x - t[1]),
                     c2 = (t[0] - t[2]).cross(x - t[2]);
      if (c0.dot(n) >= 0 && c1.dot(n) >= 0 && c2.dot(n) >= 0) return true;
    }
    return false;
  };
  int hits = 0;
  for (int i = 0; i < 5000; ++i) {
    const Triangle p = rand_tri(), q = rand_tri();
    const bool expected = edge_hits(p, q) || edge_hits(q, p);
    EXPECT_EQ(triangles_intersect(p, q), expected) << i;
    hits += expected;
  }
  EXPECT_GT(hits, 100);
}

TEST(SelfIntersection, FlatGridIsClean) {
  const Immersion imm = make_helicoid_immersion(DomainSpec::rectangle(-1, 1, 1), {});
  const SurfaceMesh mesh = build_mesh(imm, {30, 15, {}});
  const auto r = find_self_intersections(mesh);
  EXPECT_EQ(r.intersecting, 0u);
  EXPECT_EQ(r.degenerate, 0u);
  EXPECT_GT(r.tested, 0u);
}

TEST(SelfIntersection, InjectedTriangleIsFound) {
  const Immersion imm = make_helicoid_immersion(DomainSpec::rectangle(-1, 1, 1), {});
  SurfaceMesh mesh = build_mesh(imm, {30, 15, {}});
  // A spike straight through the surface around the point F(0.3, 0.2).
  const Vector3d c = helicoid_oracle(0.3, 0.2);
  const Vector3d n = Vector3d(std::sin(0.3), -std::cos(0.3), 0.0).cross(Vector3d(0, 0, 1)).normalized();
  const int base = static_cast<int>(mesh.vertices.size());
  for (const Vector3d& p : {Vector3d(c + 0.5 * n), Vector3d(c - 0.5 * n), Vector3d(c + 0.5 * n + Vector3d(0, 0, 0.01))}) {
    MeshVertex v;
    v.position = p;
    mesh.vertices.push_back(v);
  }
  mesh.triangles.push_back({base, base + 1, base + 2});
  const auto r = find_self_intersections(mesh);
  EXPECT_GT(r.intersecting, 0u);
  ASSERT_FALSE(r.pairs.empty());
  EXPECT_EQ(std::max(r.pairs[0].first, r.pairs[0].second), static_cast<int>(mesh.triangles.size()) - 1);
}

TEST(SelfIntersection, DegenerateCounted) {
  SurfaceMesh mesh;
  for (const Vector3d& p : {Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(2, 0, 0), Vector3d(0, 1, 0)}) {
    MeshVertex v;
    v.position = p;
    mesh.vertices.push_back(v);
  }
  mesh.triangles = {{0, 1, 2}, {0, 1, 3}};
  EXPECT_EQ(find_self_intersections(mesh).degenerate, 1u);
}
