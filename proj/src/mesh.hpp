#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rim {

/* Conforming triangle mesh: counterclockwise triangles, per-vertex
 * boundary flags, mesh_size_h = longest edge. */
struct Mesh {
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<char> boundary;
  double mesh_size_h = 0.0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int boundary_count() const;
};

/* Criss-cross triangulation of [0,1]^2: n x n cells of size ~h_target,
 * each split along one diagonal. jitter in [0, 0.5) displaces interior
 * vertices by up to jitter * cell (seeded, deterministic); boundary
 * vertices never move. */
Mesh square_mesh(double h_target, double jitter, std::uint64_t seed = 0);

/* Polar triangulation of the disc of given radius centred at the origin:
 * ceil(radius / h_target) concentric rings, boundary vertices exactly on
 * the circle, all triangles positively oriented. */
Mesh disc_mesh(double radius, double h_target);

double triangle_area(const Mesh& mesh, int t);
double mesh_area(const Mesh& mesh);

void save_mesh_text(const Mesh& mesh, const std::string& path);

}  // namespace rim
