#include "mdisk/mesh.hpp"

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace mdisk;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

SurfaceMesh small_mesh() {
  const Immersion imm = make_family_immersion(ConstructionParams({-0.2, 0.2}, 0.1), {});
  return build_mesh(imm, {20, 7, {}});
}

}  // namespace

TEST(Mesh, StructuredCounts) {
  const SurfaceMesh mesh = small_mesh();
  EXPECT_EQ(mesh.columns, 2 * 19 + 1);
  EXPECT_EQ(mesh.rows, 7);
  EXPECT_EQ(mesh.vertices.size(), static_cast<size_t>(mesh.columns * mesh.rows));
  EXPECT_EQ(mesh.triangles.size(), static_cast<size_t>(2 * (mesh.columns - 1) * (mesh.rows - 1)));
  EXPECT_EQ(mesh.provenance.at("field"), "family");
  EXPECT_DOUBLE_EQ(mesh.provenance.at("a").get<double>(), 0.1);
}

TEST(Mesh, OrientationFollowsTangents) {
  const Immersion imm = make_family_immersion(ConstructionParams({-0.2, 0.2}, 0.1), {});
  const SurfaceMesh mesh = build_mesh(imm, {80, 11, {}});
  size_t agree = 0;
  for (const auto& t : mesh.triangles) {
    const auto& p0 = mesh.vertices[static_cast<size_t>(t[0])];
    const Eigen::Vector3d n = (mesh.vertices[static_cast<size_t>(t[1])].position - p0.position)
                                  .cross(mesh.vertices[static_cast<size_t>(t[2])].position - p0.position);
    const Eigen::Vector3d ref = imm.tangent_x(p0.z).cross(imm.tangent_y(p0.z));
    if (n.dot(ref) > 0) ++agree;
  }
  EXPECT_GE(static_cast<double>(agree), 0.999 * static_cast<double>(mesh.triangles.size()));
}

TEST(Mesh, ClipKeepsInsideBall) {
  const SurfaceMesh mesh = small_mesh();
  const double R = 0.1;
  const SurfaceMesh clipped = clip_to_ball(mesh, R);
  ASSERT_FALSE(clipped.empty());
  EXPECT_LT(clipped.triangles.size(), mesh.triangles.size());
  for (const auto& v : clipped.vertices) EXPECT_LE(v.position.norm(), R * (1 + 1e-9));
  for (const auto& t : clipped.triangles) {
    for (int i : t) ASSERT_LT(static_cast<size_t>(i), clipped.vertices.size());
  }
  EXPECT_DOUBLE_EQ(presentation_radius(0.1), 0.05);
  EXPECT_DOUBLE_EQ(presentation_radius(4.0), 0.25);
}

TEST(Mesh, FormatSelection) {
  EXPECT_EQ(parse_mesh_format("obj"), MeshFormat::kObj);
  EXPECT_EQ(parse_mesh_format("ply"), MeshFormat::kPly);
  EXPECT_THROW(parse_mesh_format("stl"), std::invalid_argument);
  EXPECT_EQ(mesh_format_for("a/b.obj"), MeshFormat::kObj);
  EXPECT_EQ(mesh_format_for("b.ply", true), MeshFormat::kPlyBinary);
  EXPECT_THROW(mesh_format_for("b.stl"), std::invalid_argument);
}

class MeshRoundTrip : public ::testing::TestWithParam<MeshFormat> {};

TEST_P(MeshRoundTrip, PositionsAndFacesSurvive) {
  const SurfaceMesh mesh = small_mesh();
  const auto path = temp_file(GetParam() == MeshFormat::kObj ? "rt.obj" : "rt.ply");
  write_mesh(mesh, GetParam(), path);
  const SurfaceMesh back = read_mesh(path);
  ASSERT_EQ(back.vertices.size(), mesh.vertices.size());
  ASSERT_EQ(back.triangles, mesh.triangles);
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    EXPECT_LT((back.vertices[i].position - mesh.vertices[i].position).cwiseAbs().maxCoeff(), 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(Formats, MeshRoundTrip,
                         ::testing::Values(MeshFormat::kObj, MeshFormat::kPly, MeshFormat::kPlyBinary));

TEST(Mesh, ObjCarriesConfigComment) {
  const auto path = temp_file("cfg.obj");
  write_mesh(small_mesh(), MeshFormat::kObj, path);
  std::ifstream in(path);
  std::string line;
  bool found = false;
  while (std::getline(in, line) && line.rfind("#", 0) == 0) {
    if (line.rfind("# config: ", 0) == 0) {
      found = true;
      const auto cfg = nlohmann::json::parse(line.substr(10));
      EXPECT_EQ(cfg.at("field"), "family");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Mesh, ReadMissingFileThrows) {
  EXPECT_THROW(read_mesh(temp_file("does_not_exist.obj")), std::runtime_error);
}
