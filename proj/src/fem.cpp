#include "fem.hpp"

#include <cmath>
#include <vector>

namespace rim {

FemMatrices assemble(const Mesh& mesh, const RefractionIndex& n) {
  if (!n.value_at)
    throw Error(ErrorCode::invalid_argument, "assemble: refraction index unset");
  const int n_vertices = mesh.vertex_count();
  if (n_vertices < 3 || mesh.triangle_count() < 1)
    throw Error(ErrorCode::mesh, "assemble: mesh too small");

  /* Permute degrees of freedom interior-first so the transmission block
   * layout can address plain index ranges. */
  std::vector<int> dof(static_cast<size_t>(n_vertices), -1);
  int n_interior = 0;
  for (int v = 0; v < n_vertices; ++v)
    if (!mesh.boundary[static_cast<size_t>(v)]) dof[static_cast<size_t>(v)] = n_interior++;
  int n_boundary = 0;
  for (int v = 0; v < n_vertices; ++v)
    if (mesh.boundary[static_cast<size_t>(v)])
      dof[static_cast<size_t>(v)] = n_interior + n_boundary++;

  std::vector<Eigen::Triplet<double>> ts, tm, tmn;
  ts.reserve(static_cast<size_t>(mesh.triangle_count()) * 9);
  tm.reserve(ts.capacity());
  tmn.reserve(ts.capacity());

  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[static_cast<size_t>(t)];
    const auto& p0 = mesh.vertices[static_cast<size_t>(tri[0])];
    const auto& p1 = mesh.vertices[static_cast<size_t>(tri[1])];
    const auto& p2 = mesh.vertices[static_cast<size_t>(tri[2])];
    const double area = triangle_area(mesh, t);
    if (!(area > 0.0))
      throw Error(ErrorCode::mesh, "assemble: degenerate triangle " +
                                       std::to_string(t) + " (area " +
                                       std::to_string(area) + ")");

    /* Constant gradients of the barycentric basis: grad xi_i =
     * (opposite edge rotated by 90 degrees) / (2 area). */
    const double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
    const double by[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};

    const double cx = (p0[0] + p1[0] + p2[0]) / 3.0;
    const double cy = (p0[1] + p1[1] + p2[1]) / 3.0;
    const double n_value = n.value_at(cx, cy);
    if (!(n_value > 0.0) || n_value == 1.0)
      throw Error(ErrorCode::invalid_argument,
                  "assemble: refraction index must be positive and != 1");

    for (int a = 0; a < 3; ++a) {
      const int ga = dof[static_cast<size_t>(tri[a])];
      for (int b = 0; b < 3; ++b) {
        const int gb = dof[static_cast<size_t>(tri[b])];
        const double stiff = (bx[a] * bx[b] + by[a] * by[b]) / (4.0 * area);
        const double mass = area / 12.0 * (a == b ? 2.0 : 1.0);
        ts.emplace_back(ga, gb, stiff);
        tm.emplace_back(ga, gb, mass);
        tmn.emplace_back(ga, gb, n_value * mass);
      }
    }
  }

  FemMatrices fem;
  fem.n_interior = n_interior;
  fem.n_boundary = n_boundary;
  fem.s.resize(n_vertices, n_vertices);
  fem.m.resize(n_vertices, n_vertices);
  fem.m_n.resize(n_vertices, n_vertices);
  fem.s.setFromTriplets(ts.begin(), ts.end());
  fem.m.setFromTriplets(tm.begin(), tm.end());
  fem.m_n.setFromTriplets(tmn.begin(), tmn.end());
  fem.s.makeCompressed();
  fem.m.makeCompressed();
  fem.m_n.makeCompressed();
  return fem;
}

namespace {

/* Copy block [rows0, rows0+nr) x [cols0, cols0+nc) of src, scaled, into
 * the triplet list at offset (dst_row, dst_col), optionally transposed. */
void add_block(std::vector<Eigen::Triplet<double>>& out,
               const SparseRealMatrix& src, int rows0, int nr, int cols0,
               int nc, int dst_row, int dst_col, double scale,
               bool transpose = false) {
  for (int k = 0; k < src.outerSize(); ++k) {
    for (SparseRealMatrix::InnerIterator it(src, k); it; ++it) {
      const int r = static_cast<int>(it.row()) - rows0;
      const int c = static_cast<int>(it.col()) - cols0;
      if (r < 0 || r >= nr || c < 0 || c >= nc) continue;
      if (transpose)
        out.emplace_back(dst_row + c, dst_col + r, scale * it.value());
      else
        out.emplace_back(dst_row + r, dst_col + c, scale * it.value());
    }
  }
}

}  // namespace

Pencil te_pencil(const FemMatrices& fem) {
  const int n0 = fem.n_interior;
  const int nb = fem.n_boundary;
  if (n0 < 1 || nb < 1)
    throw Error(ErrorCode::mesh,
                "te_pencil: mesh needs interior and boundary vertices");
  const int dim = 2 * n0 + nb;

  std::vector<Eigen::Triplet<double>> ta, tb;
  /* Row 1: [S00, 0, S0B], row 2: [0, S00, S0B],
   * row 3: [S0B^T, -S0B^T, 0]. */
  add_block(ta, fem.s, 0, n0, 0, n0, 0, 0, 1.0);
  add_block(ta, fem.s, 0, n0, n0, nb, 0, 2 * n0, 1.0);
  add_block(ta, fem.s, 0, n0, 0, n0, n0, n0, 1.0);
  add_block(ta, fem.s, 0, n0, n0, nb, n0, 2 * n0, 1.0);
  add_block(ta, fem.s, 0, n0, n0, nb, 2 * n0, 0, 1.0, true);
  add_block(ta, fem.s, 0, n0, n0, nb, 2 * n0, n0, -1.0, true);

  /* Row 1: [Mn00, 0, Mn0B], row 2: [0, M00, M0B],
   * row 3: [Mn0B^T, -M0B^T, MnBB - MBB]. */
  add_block(tb, fem.m_n, 0, n0, 0, n0, 0, 0, 1.0);
  add_block(tb, fem.m_n, 0, n0, n0, nb, 0, 2 * n0, 1.0);
  add_block(tb, fem.m, 0, n0, 0, n0, n0, n0, 1.0);
  add_block(tb, fem.m, 0, n0, n0, nb, n0, 2 * n0, 1.0);
  add_block(tb, fem.m_n, 0, n0, n0, nb, 2 * n0, 0, 1.0, true);
  add_block(tb, fem.m, 0, n0, n0, nb, 2 * n0, n0, -1.0, true);
  add_block(tb, fem.m_n, n0, nb, n0, nb, 2 * n0, 2 * n0, 1.0);
  add_block(tb, fem.m, n0, nb, n0, nb, 2 * n0, 2 * n0, -1.0);

  SparseRealMatrix a(dim, dim), b(dim, dim);
  a.setFromTriplets(ta.begin(), ta.end());
  b.setFromTriplets(tb.begin(), tb.end());
  return Pencil::from_real(std::move(a), std::move(b), StorageHint::sparse);
}

Pencil neumann_pencil(const FemMatrices& fem) {
  SparseRealMatrix a = fem.s;
  SparseRealMatrix b = fem.m;
  return Pencil::from_real(std::move(a), std::move(b), StorageHint::sparse);
}

}  // namespace rim
