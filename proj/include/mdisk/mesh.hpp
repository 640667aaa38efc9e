#pragma once

#include "mdisk/domain.hpp"
#include "mdisk/immersion.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <array>
#include <complex>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace mdisk {

struct MeshVertex {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  std::complex<double> z;
  int piece = 0;
  int column = -1;  // structured-grid coordinates; -1 for clip-generated vertices
  int row = -1;
};

struct SurfaceMesh {
  std::vector<MeshVertex> vertices;
  std::vector<std::array<int, 3>> triangles;
  int columns = 0;
  int rows = 0;
  nlohmann::json provenance = nlohmann::json::object();

  bool empty() const { return triangles.empty(); }
};

struct MeshOptions {
  std::optional<double> clip_radius;  // clip to the ball B_R about the origin
};

/// Structured mesh over sample_grid(domain, grid). Triangles are ordered so
/// their geometric normal follows Fx x Fy.
SurfaceMesh build_mesh(const Immersion& immersion, const GridSpec& grid,
                       const MeshOptions& options = {});

/// Keeps the part of the mesh inside |p| <= R; triangles crossing the sphere
/// are cut at the chord crossings and fan-triangulated.
SurfaceMesh clip_to_ball(const SurfaceMesh& mesh, double radius);

/// R = min(r0 / 2, 1/4).
inline double presentation_radius(double r0) { return std::min(r0 / 2.0, 0.25); }

enum class MeshFormat { kObj, kPly, kPlyBinary };

MeshFormat parse_mesh_format(std::string_view name);
/// Picks the format from the file extension (.obj / .ply).
MeshFormat mesh_format_for(const std::filesystem::path& path, bool binary_ply = false);

void write_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path);

/// Positions and faces only; reads what write_mesh produces.
SurfaceMesh read_mesh(const std::filesystem::path& path);

}  // namespace mdisk
