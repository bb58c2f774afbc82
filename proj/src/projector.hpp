#pragma once

#include <span>
#include <utility>
#include <vector>

#include "linsolve.hpp"
#include "pencil.hpp"
#include "rectangle.hpp"

namespace rim {

/* One contour quadrature node: location z on the rectangle boundary and
 * weight w with the edge Jacobian absorbed. Over a closed contour the
 * weights sum to zero exactly. */
struct QuadratureNode {
  Complex z;
  Complex w;
};

/* Two-point Gauss rule per edge, counterclockwise: 8 nodes. On the edge
 * from z0 to z1 the nodes sit at mid +- half/sqrt(3) with weight half,
 * where mid = (z0+z1)/2 and half = (z1-z0)/2. */
std::vector<QuadratureNode> edge_quadrature(const Rectangle& rect);

/* Scalar rational filter f(lambda) = 1/(2 pi i) sum_q w_q / (z_q - lambda)
 * induced by the rule; the quadrature projection acts as f(lambda_i) on
 * each eigencomponent. */
Complex rational_filter(std::span<const QuadratureNode> nodes, Complex lambda);

struct IndicatorResult {
  double chi = 0.0;  /* max_j |P(K P y_j)| / |P y_j| (0/0 counts as 0) */
  std::vector<std::pair<double, double>> per_vector;  /* (|Py|, |P(K Py)|) */
  int degenerate_nodes = 0;  /* nodes perturbed off an eigenvalue */
};

/* Holds the 8 shifted factorizations for one rectangle so that repeated
 * projections (the J probe vectors, both indicator passes) reuse them.
 * A node whose factorization is singular (it landed on an eigenvalue) is
 * perturbed inward by 1e-8 * diam(rect) toward the center and factored
 * once more; a second failure propagates. */
class BoundaryProjector {
 public:
  BoundaryProjector(const Pencil& pencil, const Rectangle& rect,
                    SolveStats* stats = nullptr);

  /* P y ~= sum_q r_q with (z_q B - A) r_q = w_q/(2 pi i) B y.
   * Columns are projected independently; summation order is fixed by node
   * index so results are reproducible. */
  Eigen::VectorXcd project(const Eigen::VectorXcd& y) const;
  Eigen::MatrixXcd project(const Eigen::MatrixXcd& ys) const;

  IndicatorResult indicator(const Eigen::MatrixXcd& ys,
                            double amplifier) const;

  const std::vector<QuadratureNode>& nodes() const { return nodes_; }
  int degenerate_nodes() const { return degenerate_; }

 private:
  const Pencil* pencil_;
  std::vector<QuadratureNode> nodes_;
  std::vector<ShiftedFactorization> factorizations_;
  int degenerate_ = 0;
  SolveStats* stats_;
};

/* One-shot conveniences over a fresh BoundaryProjector. */
Eigen::VectorXcd project(const Pencil& pencil, const Rectangle& rect,
                         const Eigen::VectorXcd& y);
IndicatorResult indicator(const Pencil& pencil, const Rectangle& rect,
                          const std::vector<Eigen::VectorXcd>& ys,
                          double amplifier);

}  // namespace rim
