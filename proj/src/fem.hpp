#pragma once

#include <functional>

#include "mesh.hpp"
#include "pencil.hpp"

namespace rim {

/* Index of refraction, piecewise constant per element (evaluated at the
 * centroid). Must be positive and different from 1 everywhere. */
struct RefractionIndex {
  std::function<double(double x, double y)> value_at;
};

inline RefractionIndex constant_refraction(double value) {
  return {[value](double, double) { return value; }};
}

/* Linear Lagrange matrices with interior degrees of freedom first:
 * stiffness s = (grad xi_j, grad xi_l), mass m = (xi_j, xi_l), weighted
 * mass m_n = (n xi_j, xi_l). All exact per-element integration. */
struct FemMatrices {
  SparseRealMatrix s, m, m_n;
  int n_interior = 0;
  int n_boundary = 0;
};

FemMatrices assemble(const Mesh& mesh, const RefractionIndex& n);

/* Interior-transmission block pencil A x = k^2 B x for the unknown
 * ordering x = [w_0; v_0; w_B]:
 *
 *   A = [ S00   0    S0B ]      B = [ Mn00   0     Mn0B      ]
 *       [ 0     S00  S0B ]          [ 0      M00   M0B       ]
 *       [ S0B^T -S0B^T 0  ]         [ Mn0B^T -M0B^T MnBB-MBB ]
 *
 * Dimension 2*N0 + NB. A and B are real and non-symmetric. */
Pencil te_pencil(const FemMatrices& fem);

/* Neumann Laplacian S x = lambda M x over all degrees of freedom. */
Pencil neumann_pencil(const FemMatrices& fem);

}  // namespace rim
