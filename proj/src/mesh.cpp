#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace rim {

int Mesh::boundary_count() const {
  int count = 0;
  for (char flag : boundary) count += flag ? 1 : 0;
  return count;
}

double triangle_area(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangles[static_cast<size_t>(t)];
  const auto& p0 = mesh.vertices[static_cast<size_t>(tri[0])];
  const auto& p1 = mesh.vertices[static_cast<size_t>(tri[1])];
  const auto& p2 = mesh.vertices[static_cast<size_t>(tri[2])];
  return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) -
                (p2[0] - p0[0]) * (p1[1] - p0[1]));
}

double mesh_area(const Mesh& mesh) {
  double total = 0.0;
  for (int t = 0; t < mesh.triangle_count(); ++t) total += triangle_area(mesh, t);
  return total;
}

namespace {

double longest_edge(const Mesh& mesh) {
  double longest = 0.0;
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const auto& a = mesh.vertices[static_cast<size_t>(tri[e])];
      const auto& b = mesh.vertices[static_cast<size_t>(tri[(e + 1) % 3])];
      longest = std::max(longest, std::hypot(b[0] - a[0], b[1] - a[1]));
    }
  }
  return longest;
}

}  // namespace

Mesh square_mesh(double h_target, double jitter, std::uint64_t seed) {
  if (!(h_target > 0.0) || !(h_target < 1.0))
    throw Error(ErrorCode::invalid_argument, "square_mesh: need 0 < h < 1");
  if (!(jitter >= 0.0) || !(jitter < 0.5))
    throw Error(ErrorCode::invalid_argument,
                "square_mesh: need 0 <= jitter < 0.5");

  const int n = std::max(1, static_cast<int>(std::lround(1.0 / h_target)));
  const double cell = 1.0 / n;

  Mesh mesh;
  mesh.vertices.reserve(static_cast<size_t>((n + 1) * (n + 1)));
  mesh.boundary.reserve(mesh.vertices.capacity());
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      mesh.vertices.push_back({static_cast<double>(i) / n,
                               static_cast<double>(j) / n});
      mesh.boundary.push_back(i == 0 || i == n || j == 0 || j == n);
    }
  }

  if (jitter > 0.0) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
      if (mesh.boundary[v]) continue;
      const double angle = 2.0 * std::numbers::pi * uniform();
      const double radius = jitter * cell * uniform();
      mesh.vertices[v][0] += radius * std::cos(angle);
      mesh.vertices[v][1] += radius * std::sin(angle);
    }
  }

  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  mesh.triangles.reserve(static_cast<size_t>(2 * n * n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      /* Split along the cell diagonal (i,j) -> (i+1,j+1). */
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }

  mesh.mesh_size_h = longest_edge(mesh);
  return mesh;
}

Mesh disc_mesh(double radius, double h_target) {
  if (!(radius > 0.0))
    throw Error(ErrorCode::invalid_argument, "disc_mesh: radius must be > 0");
  if (!(h_target > 0.0) || !(h_target < radius))
    throw Error(ErrorCode::invalid_argument,
                "disc_mesh: need 0 < h < radius");

  const int rings = static_cast<int>(std::ceil(radius / h_target));

  /* Vertices ring by ring; ring r has per_ring[r] equally spaced points. */
  Mesh mesh;
  std::vector<int> ring_start(static_cast<size_t>(rings) + 1, 0);
  std::vector<int> per_ring(static_cast<size_t>(rings) + 1, 0);
  mesh.vertices.push_back({0.0, 0.0});
  mesh.boundary.push_back(0);
  per_ring[0] = 1;
  for (int r = 1; r <= rings; ++r) {
    const double rho = radius * r / rings;
    const int count = std::max(
        6, static_cast<int>(std::lround(2.0 * std::numbers::pi * rho / h_target)));
    ring_start[static_cast<size_t>(r)] = mesh.vertex_count();
    per_ring[static_cast<size_t>(r)] = count;
    for (int s = 0; s < count; ++s) {
      const double angle = 2.0 * std::numbers::pi * s / count;
      mesh.vertices.push_back({rho * std::cos(angle), rho * std::sin(angle)});
      mesh.boundary.push_back(r == rings);
    }
  }

  /* Innermost fan around the centre. */
  const int n1 = per_ring[1];
  for (int s = 0; s < n1; ++s)
    mesh.triangles.push_back(
        {0, ring_start[1] + s, ring_start[1] + (s + 1) % n1});

  /* Stitch consecutive rings: advance around both circles, always
   * connecting to the vertex whose successor comes first in angle. */
  for (int r = 1; r < rings; ++r) {
    const int na = per_ring[static_cast<size_t>(r)];
    const int nb = per_ring[static_cast<size_t>(r) + 1];
    const int base_a = ring_start[static_cast<size_t>(r)];
    const int base_b = ring_start[static_cast<size_t>(r) + 1];
    int i = 0, j = 0;
    while (i < na || j < nb) {
      const double next_a =
          i < na ? (i + 1) * 2.0 * std::numbers::pi / na : 1e30;
      const double next_b =
          j < nb ? (j + 1) * 2.0 * std::numbers::pi / nb : 1e30;
      const int ai = base_a + i % na;
      const int bj = base_b + j % nb;
      if (next_b <= next_a) {
        mesh.triangles.push_back({ai, bj, base_b + (j + 1) % nb});
        ++j;
      } else {
        mesh.triangles.push_back({ai, bj, base_a + (i + 1) % na});
        ++i;
      }
    }
  }

  mesh.mesh_size_h = longest_edge(mesh);
  return mesh;
}

void save_mesh_text(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error(ErrorCode::io, path + ": cannot open for writing");
  std::fprintf(f, "%d %d\n", mesh.vertex_count(), mesh.triangle_count());
  for (int v = 0; v < mesh.vertex_count(); ++v)
    std::fprintf(f, "%.17g %.17g %d\n", mesh.vertices[static_cast<size_t>(v)][0],
                 mesh.vertices[static_cast<size_t>(v)][1],
                 mesh.boundary[static_cast<size_t>(v)] ? 1 : 0);
  for (const auto& tri : mesh.triangles)
    std::fprintf(f, "%d %d %d\n", tri[0], tri[1], tri[2]);
  if (std::fclose(f) != 0) throw Error(ErrorCode::io, path + ": write failed");
}

}  // namespace rim
