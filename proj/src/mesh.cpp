#include "mdisk/mesh.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mdisk {

SurfaceMesh build_mesh(const Immersion& immersion, const GridSpec& grid,
                       const MeshOptions& options) {
  const SampleGrid samples = sample_grid(immersion.domain(), grid);
  std::vector<Complex> zs;
  zs.reserve(samples.points.size());
  for (const auto& p : samples.points) zs.emplace_back(p.x, p.y);
  const auto evaluated = immersion.eval_batch(zs);

  SurfaceMesh mesh;
  mesh.columns = samples.columns;
  mesh.rows = samples.rows;
  mesh.vertices.reserve(zs.size());
  for (size_t i = 0; i < zs.size(); ++i) {
    const GridPoint& p = samples.points[i];
    mesh.vertices.push_back({evaluated[i].F, zs[i], p.piece, p.column, p.row});
  }
  const int rows = samples.rows;
  auto id = [rows](int c, int r) { return c * rows + r; };
  for (int c = 0; c + 1 < samples.columns; ++c) {
    for (int r = 0; r + 1 < rows; ++r) {
      mesh.triangles.push_back({id(c, r), id(c + 1, r), id(c + 1, r + 1)});
      mesh.triangles.push_back({id(c, r), id(c + 1, r + 1), id(c, r + 1)});
    }
  }

  nlohmann::json prov;
  prov["field"] = immersion.field().name();
  if (const auto& params = immersion.domain().params()) {
    prov["points"] = std::vector<double>(params->points().begin(), params->points().end());
    prov["a"] = params->a();
  }
  prov["grid"] = {{"nx", grid.nx}, {"ny", grid.ny}};
  prov["quadrature"] = {{"abs_tol", immersion.quadrature().abs_tol},
                        {"max_depth", immersion.quadrature().max_depth},
                        {"rule", immersion.quadrature().rule}};
  if (options.clip_radius) prov["clip_radius"] = *options.clip_radius;
  mesh.provenance = std::move(prov);

  if (options.clip_radius) {
    auto provenance = mesh.provenance;
    mesh = clip_to_ball(mesh, *options.clip_radius);
    mesh.provenance = std::move(provenance);
  }
  return mesh;
}

SurfaceMesh clip_to_ball(const SurfaceMesh& mesh, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("clip radius must be positive");
  const double r2 = radius * radius;
  std::vector<MeshVertex> verts = mesh.vertices;
  auto inside = [&](int i) { return verts[static_cast<size_t>(i)].position.squaredNorm() <= r2; };

  std::map<std::pair<int, int>, int> crossings;
  auto crossing = [&](int in, int out) {
    const auto key = std::minmax(in, out);
    if (auto it = crossings.find(key); it != crossings.end()) return it->second;
    const MeshVertex& a = verts[static_cast<size_t>(in)];
    const MeshVertex& b = verts[static_cast<size_t>(out)];
    const Eigen::Vector3d d = b.position - a.position;
    const double dd = d.squaredNorm();
    const double ad = a.position.dot(d);
    const double c = a.position.squaredNorm() - r2;
    const double t = std::clamp((-ad + std::sqrt(std::max(0.0, ad * ad - dd * c))) / dd, 0.0, 1.0);
    MeshVertex v;
    v.position = a.position + t * d;
    if (v.position.squaredNorm() > r2) v.position *= radius / v.position.norm();
    v.z = a.z + t * (b.z - a.z);
    v.piece = a.piece;
    verts.push_back(v);
    const int idx = static_cast<int>(verts.size()) - 1;
    crossings.emplace(key, idx);
    return idx;
  };

  std::vector<std::array<int, 3>> tris;
  for (const auto& tri : mesh.triangles) {
    std::vector<int> poly;
    for (int e = 0; e < 3; ++e) {
      const int cur = tri[static_cast<size_t>(e)];
      const int nxt = tri[static_cast<size_t>((e + 1) % 3)];
      const bool cin = inside(cur), nin = inside(nxt);
      if (cin) poly.push_back(cur);
      if (cin != nin) poly.push_back(cin ? crossing(cur, nxt) : crossing(nxt, cur));
    }
    for (size_t k = 2; k < poly.size(); ++k) tris.push_back({poly[0], poly[k - 1], poly[k]});
  }

  SurfaceMesh out;
  out.provenance = mesh.provenance;
  std::vector<int> remap(verts.size(), -1);
  for (auto& tri : tris) {
    for (int& v : tri) {
      int& m = remap[static_cast<size_t>(v)];
      if (m < 0) {
        m = static_cast<int>(out.vertices.size());
        out.vertices.push_back(verts[static_cast<size_t>(v)]);
      }
      v = m;
    }
  }
  out.triangles = std::move(tris);
  return out;
}

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "obj" || name == "OBJ") return MeshFormat::kObj;
  if (name == "ply" || name == "PLY") return MeshFormat::kPly;
  if (name == "ply-binary" || name == "PLY-BINARY") return MeshFormat::kPlyBinary;
  throw std::invalid_argument("unsupported mesh format: " + std::string(name));
}

MeshFormat mesh_format_for(const std::filesystem::path& path, bool binary_ply) {
  const std::string ext = path.extension().string();
  if (ext == ".obj" || ext == ".OBJ") return MeshFormat::kObj;
  if (ext == ".ply" || ext == ".PLY") return binary_ply ? MeshFormat::kPlyBinary : MeshFormat::kPly;
  throw std::invalid_argument("cannot infer mesh format from '" + path.string() + "'");
}

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

template <class T>
void put_le(std::ostream& os, T value) {
  auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  os.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& is) {
  std::array<char, sizeof(T)> bytes;
  if (!is.read(bytes.data(), bytes.size())) throw std::runtime_error("truncated binary PLY");
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  return std::bit_cast<T>(bytes);
}

}  // namespace

void write_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  const std::string config = mesh.provenance.dump();

  if (format == MeshFormat::kObj) {
    os << "# mdisk surface mesh\n# config: " << config << "\n";
    for (const auto& v : mesh.vertices) {
      os << "v " << fmt9(v.position.x()) << ' ' << fmt9(v.position.y()) << ' '
         << fmt9(v.position.z()) << '\n';
    }
    for (const auto& t : mesh.triangles) {
      os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
  } else {
    const bool binary = format == MeshFormat::kPlyBinary;
    os << "ply\n"
       << (binary ? "format binary_little_endian 1.0\n" : "format ascii 1.0\n")
       << "comment config " << config << "\n"
       << "element vertex " << mesh.vertices.size() << "\n"
       << "property double x\nproperty double y\nproperty double z\n"
       << "element face " << mesh.triangles.size() << "\n"
       << "property list uchar int vertex_indices\n"
       << "end_header\n";
    if (binary) {
      for (const auto& v : mesh.vertices) {
        for (int k = 0; k < 3; ++k) put_le<double>(os, v.position[k]);
      }
      for (const auto& t : mesh.triangles) {
        put_le<std::uint8_t>(os, 3);
        for (int k : t) put_le<std::int32_t>(os, k);
      }
    } else {
      for (const auto& v : mesh.vertices) {
        os << fmt9(v.position.x()) << ' ' << fmt9(v.position.y()) << ' '
           << fmt9(v.position.z()) << '\n';
      }
      for (const auto& t : mesh.triangles) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
  }
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

namespace {

SurfaceMesh read_obj(std::istream& is) {
  SurfaceMesh mesh;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      MeshVertex v;
      ls >> v.position.x() >> v.position.y() >> v.position.z();
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> t{};
      for (int& k : t) {
        std::string tok;
        ls >> tok;
        k = std::stoi(tok.substr(0, tok.find('/'))) - 1;
      }
      mesh.triangles.push_back(t);
    }
  }
  return mesh;
}

SurfaceMesh read_ply(std::istream& is) {
  std::string line;
  std::getline(is, line);
  if (line != "ply") throw std::runtime_error("not a PLY file");
  bool binary = false;
  size_t nv = 0, nf = 0;
  while (std::getline(is, line) && line != "end_header") {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "format") {
      std::string kind;
      ls >> kind;
      binary = kind == "binary_little_endian";
      if (!binary && kind != "ascii") throw std::runtime_error("unsupported PLY format " + kind);
    } else if (tag == "element") {
      std::string what;
      size_t count = 0;
      ls >> what >> count;
      (what == "vertex" ? nv : nf) = count;
    }
  }
  SurfaceMesh mesh;
  mesh.vertices.resize(nv);
  mesh.triangles.resize(nf);
  for (auto& v : mesh.vertices) {
    for (int k = 0; k < 3; ++k) {
      if (binary) {
        v.position[k] = get_le<double>(is);
      } else {
        is >> v.position[k];
      }
    }
  }
  for (auto& t : mesh.triangles) {
    int count = 0;
    if (binary) {
      count = get_le<std::uint8_t>(is);
    } else {
      is >> count;
    }
    if (count != 3) throw std::runtime_error("only triangle faces are supported");
    for (int& k : t) {
      if (binary) {
        k = get_le<std::int32_t>(is);
      } else {
        is >> k;
      }
    }
  }
  if (!is) throw std::runtime_error("malformed PLY body");
  return mesh;
}

}  // namespace

SurfaceMesh read_mesh(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  const std::string ext = path.extension().string();
  if (ext == ".obj" || ext == ".OBJ") return read_obj(is);
  if (ext == ".ply" || ext == ".PLY") return read_ply(is);
  throw std::invalid_argument("cannot infer mesh format from '" + path.string() + "'");
}

}  // namespace mdisk
