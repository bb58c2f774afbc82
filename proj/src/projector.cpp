#include "projector.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rim {

std::vector<QuadratureNode> edge_quadrature(const Rectangle& rect) {
  const Complex corners[4] = {{rect.re_min, rect.im_min},
                              {rect.re_max, rect.im_min},
                              {rect.re_max, rect.im_max},
                              {rect.re_min, rect.im_max}};
  const double t = 1.0 / std::sqrt(3.0);  /* 2-point Gauss abscissa */
  std::vector<QuadratureNode> nodes;
  nodes.reserve(8);
  for (int e = 0; e < 4; ++e) {
    const Complex z0 = corners[e];
    const Complex z1 = corners[(e + 1) % 4];
    const Complex mid = 0.5 * (z0 + z1);
    const Complex half = 0.5 * (z1 - z0);
    nodes.push_back({mid - half * t, half});
    nodes.push_back({mid + half * t, half});
  }
  return nodes;
}

Complex rational_filter(std::span<const QuadratureNode> nodes, Complex lambda) {
  const Complex inv_2pi_i = Complex(0.0, -1.0) / (2.0 * std::numbers::pi);
  Complex sum = 0.0;
  for (const QuadratureNode& node : nodes) sum += node.w / (node.z - lambda);
  return inv_2pi_i * sum;
}

BoundaryProjector::BoundaryProjector(const Pencil& pencil,
                                     const Rectangle& rect, SolveStats* stats)
    : pencil_(&pencil), nodes_(edge_quadrature(rect)), stats_(stats) {
  factorizations_.reserve(nodes_.size());
  for (QuadratureNode& node : nodes_) {
    if (stats_) ++stats_->factorizations;
    try {
      factorizations_.emplace_back(pencil, node.z);
      continue;
    } catch (const SingularShiftError&) {
      /* The node sits on an eigenvalue; nudge it toward the interior and
       * factor once more. */
      const Complex center = rect.center();
      const Complex direction = center - node.z;
      node.z += (1e-8 * rect.diameter() / std::abs(direction)) * direction;
    }
    if (stats_) ++stats_->factorizations;
    factorizations_.emplace_back(pencil, node.z);
    ++degenerate_;
  }
}

Eigen::MatrixXcd BoundaryProjector::project(const Eigen::MatrixXcd& ys) const {
  if (ys.rows() != pencil_->dim())
    throw Error(ErrorCode::dimension_mismatch, "project: row count");
  const Complex inv_2pi_i = Complex(0.0, -1.0) / (2.0 * std::numbers::pi);
  const Eigen::MatrixXcd by = pencil_->apply_b(ys);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(ys.rows(), ys.cols());
  for (size_t q = 0; q < nodes_.size(); ++q) {
    const Complex scale = inv_2pi_i * nodes_[q].w;
    if (stats_) stats_->solves += static_cast<std::uint64_t>(ys.cols());
    sum += factorizations_[q].solve(Eigen::MatrixXcd(scale * by));
  }
  return sum;
}

Eigen::VectorXcd BoundaryProjector::project(const Eigen::VectorXcd& y) const {
  return project(Eigen::MatrixXcd(y));
}

IndicatorResult BoundaryProjector::indicator(const Eigen::MatrixXcd& ys,
                                             double amplifier) const {
  if (ys.cols() < 1)
    throw Error(ErrorCode::invalid_argument, "indicator: need J >= 1 vectors");
  if (!(amplifier > 0.0))
    throw Error(ErrorCode::invalid_argument, "indicator: K must be positive");

  IndicatorResult result;
  result.degenerate_nodes = degenerate_;
  const Eigen::Index j_count = ys.cols();
  result.per_vector.assign(static_cast<size_t>(j_count), {0.0, 0.0});

  const Eigen::MatrixXcd projected = project(ys);

  /* |Py| at rounding scale means no eigencomponent inside: ratio 0. */
  const double floor = static_cast<double>(pencil_->dim()) *
                       std::numeric_limits<double>::epsilon();
  bool any_live = false;
  for (Eigen::Index j = 0; j < j_count; ++j) {
    result.per_vector[j].first = projected.col(j).norm();
    if (result.per_vector[j].first > floor * ys.col(j).norm()) any_live = true;
  }
  if (!any_live) return result;

  const Eigen::MatrixXcd reprojected =
      project(Eigen::MatrixXcd(amplifier * projected));
  for (Eigen::Index j = 0; j < j_count; ++j) {
    const double pnorm = result.per_vector[j].first;
    const double rnorm = reprojected.col(j).norm();
    result.per_vector[j].second = rnorm;
    if (pnorm > floor * ys.col(j).norm())
      result.chi = std::max(result.chi, rnorm / pnorm);
  }
  return result;
}

Eigen::VectorXcd project(const Pencil& pencil, const Rectangle& rect,
                         const Eigen::VectorXcd& y) {
  return BoundaryProjector(pencil, rect).project(y);
}

IndicatorResult indicator(const Pencil& pencil, const Rectangle& rect,
                          const std::vector<Eigen::VectorXcd>& ys,
                          double amplifier) {
  if (ys.empty())
    throw Error(ErrorCode::invalid_argument, "indicator: need J >= 1 vectors");
  Eigen::MatrixXcd packed(pencil.dim(), static_cast<Eigen::Index>(ys.size()));
  for (size_t j = 0; j < ys.size(); ++j) packed.col(static_cast<Eigen::Index>(j)) = ys[j];
  return BoundaryProjector(pencil, rect).indicator(packed, amplifier);
}

}  // namespace rim
