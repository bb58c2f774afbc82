#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace rim {

std::vector<Eigen::VectorXcd> random_probe_vectors(Eigen::Index dim, int count,
                                                   std::uint64_t seed) {
  if (count < 1)
    throw Error(ErrorCode::invalid_argument, "need at least one probe vector");
  std::mt19937_64 rng(seed);
  /* 53-bit mantissa draw keeps the stream identical across platforms,
   * unlike uniform_real_distribution. */
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Eigen::VectorXcd> vectors;
  vectors.reserve(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    Eigen::VectorXcd y(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      y[i] = Complex(2.0 * uniform() - 1.0, 0.0);
    const double norm = y.norm();
    if (norm > 0.0) y /= norm;
    vectors.push_back(std::move(y));
  }
  return vectors;
}

namespace {

struct Clusters {
  std::vector<Complex> centroids; /* sorted by (re, im) */
  std::vector<int> counts;        /* members per centroid */
};

Clusters cluster_centers(const std::vector<Complex>& centers, double epsilon) {
  const size_t n = centers.size();
  const double radius = 2.0 * std::sqrt(2.0) * epsilon;

  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&parent](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(centers[i] - centers[j]) <= radius)
        parent[find(i)] = find(j);

  std::vector<Complex> sums(n, 0.0);
  std::vector<int> counts(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const size_t root = find(i);
    sums[root] += centers[i];
    ++counts[root];
  }

  std::vector<std::pair<Complex, int>> merged;
  for (size_t i = 0; i < n; ++i)
    if (counts[i] > 0)
      merged.emplace_back(sums[i] / static_cast<double>(counts[i]), counts[i]);
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });

  Clusters out;
  for (auto& [centroid, count] : merged) {
    out.centroids.push_back(centroid);
    out.counts.push_back(count);
  }
  return out;
}

}  // namespace

std::vector<Complex> cluster_boxes(const std::vector<Complex>& centers,
                                   double epsilon) {
  return cluster_centers(centers, epsilon).centroids;
}

namespace {

struct Traversal {
  const Pencil* pencil = nullptr;
  Eigen::MatrixXcd probes;
  double threshold = 0.0;
  double epsilon = 0.0;
  double amplifier = 0.0;
  int max_depth = 0;
  bool aborted = false;
  SolveStats solve_stats;
  std::uint64_t regions = 0;
  int degenerate = 0;
  std::vector<Rectangle> boxes;
};

RegionNode explore(Traversal& t, const Rectangle& rect, int depth) {
  RegionNode node{rect};
  node.depth = depth;
  if (t.aborted) return node;

  BoundaryProjector projector(*t.pencil, rect, &t.solve_stats);
  node.ind = projector.indicator(t.probes, t.amplifier);
  node.chi = node.ind.chi;
  node.admissible = node.chi > t.threshold;
  t.degenerate += node.ind.degenerate_nodes;
  ++t.regions;

  if (!node.admissible) return node;
  if (size(rect) <= t.epsilon) {
    /* Still admissible at terminal size: record the box. */
    node.terminal = true;
    t.boxes.push_back(rect);
    return node;
  }
  if (depth >= t.max_depth) {
    t.aborted = true;
    return node;
  }
  node.children.reserve(4);
  for (const Rectangle& quadrant : subdivide(rect))
    node.children.push_back(explore(t, quadrant, depth + 1));
  return node;
}

}  // namespace

EigenReport rim(const Pencil& pencil, const Rectangle& region,
                const SearchConfig& config) {
  if (!(config.epsilon > 0.0))
    throw Error(ErrorCode::invalid_argument, "rim: epsilon must be positive");
  if (config.num_vectors < 1)
    throw Error(ErrorCode::invalid_argument, "rim: need at least one vector");
  if (!(config.amplifier > 0.0))
    throw Error(ErrorCode::invalid_argument, "rim: amplifier must be positive");
  if (!(config.effective_threshold() > 0.0))
    throw Error(ErrorCode::invalid_argument, "rim: threshold must be positive");
  if (config.max_depth < 0)
    throw Error(ErrorCode::invalid_argument, "rim: max_depth must be >= 0");

  Traversal t;
  t.pencil = &pencil;
  t.threshold = config.effective_threshold();
  t.epsilon = config.epsilon;
  t.amplifier = config.amplifier;
  t.max_depth = config.max_depth;

  const std::vector<Eigen::VectorXcd> ys =
      random_probe_vectors(pencil.dim(), config.num_vectors, config.seed);
  t.probes.resize(pencil.dim(), config.num_vectors);
  for (int j = 0; j < config.num_vectors; ++j)
    t.probes.col(j) = ys[static_cast<size_t>(j)];

  EigenReport report;
  report.tree = explore(t, region, 0);
  report.complete = !t.aborted;
  report.boxes = std::move(t.boxes);

  /* Sort terminal boxes by coordinates so the output does not depend on
   * traversal order. */
  std::sort(report.boxes.begin(), report.boxes.end(),
            [](const Rectangle& a, const Rectangle& b) {
              if (a.re_min != b.re_min) return a.re_min < b.re_min;
              return a.im_min < b.im_min;
            });
  std::vector<Complex> centers;
  centers.reserve(report.boxes.size());
  for (const Rectangle& box : report.boxes) centers.push_back(box.center());

  Clusters clusters = cluster_centers(centers, config.epsilon);
  report.eigenvalues = std::move(clusters.centroids);
  report.cluster_box_counts = std::move(clusters.counts);

  report.stats.factorizations = t.solve_stats.factorizations;
  report.stats.solves = t.solve_stats.solves;
  report.stats.regions_visited = t.regions;
  report.stats.degenerate_nodes = t.degenerate;
  return report;
}

}  // namespace rim
