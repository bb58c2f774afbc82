#pragma once

#include <cstdint>
#include <vector>

#include "pencil.hpp"
#include "projector.hpp"
#include "rectangle.hpp"

namespace rim {

struct SearchConfig {
  double epsilon = 1e-3;     /* terminal region size */
  int num_vectors = 3;       /* probe vectors J */
  double amplifier = 10.0;   /* K */
  double threshold = 0.0;    /* admissibility cutoff; <= 0 means K/10 */
  std::uint64_t seed = 1;    /* probe-vector seed */
  int max_depth = 60;        /* recursion safety bound */

  double effective_threshold() const {
    return threshold > 0.0 ? threshold : amplifier / 10.0;
  }
};

/* One visited region. Children are non-empty exactly when the region was
 * admissible and larger than epsilon (then there are 4 of them). */
struct RegionNode {
  Rectangle rect{0.0, 1.0, 0.0, 1.0}; /* placeholder until visited */
  int depth = 0;
  double chi = 0.0;
  bool admissible = false;
  bool terminal = false; /* admissible and size <= epsilon */
  IndicatorResult ind;
  std::vector<RegionNode> children;
};

struct SearchStats {
  std::uint64_t factorizations = 0;
  std::uint64_t solves = 0;
  std::uint64_t regions_visited = 0;
  int degenerate_nodes = 0;
};

struct EigenReport {
  std::vector<Complex> eigenvalues;        /* cluster centroids, (re,im) sorted */
  std::vector<int> cluster_box_counts;     /* boxes merged into each */
  std::vector<Rectangle> boxes;            /* terminal admissible boxes */
  RegionNode tree;                         /* full exploration tree */
  SearchStats stats;
  bool complete = true;                    /* false if max_depth was hit */
};

/* Probe vectors: entries i.i.d. uniform on [-1, 1] from a fixed-stream
 * generator, each vector normalized to unit 2-norm. The same vectors are
 * reused for every region of a search. */
std::vector<Eigen::VectorXcd> random_probe_vectors(Eigen::Index dim, int count,
                                                   std::uint64_t seed);

/* Transitive-closure clustering of box centers at radius 2*sqrt(2)*epsilon;
 * returns centroids sorted by (re, im). */
std::vector<Complex> cluster_boxes(const std::vector<Complex>& centers,
                                   double epsilon);

/* Recursive integral method: depth-first admissibility search over
 * quadrisections of `region` until admissible boxes shrink to
 * config.epsilon, then cluster the surviving box centers. Deterministic
 * for identical inputs (including seed). */
EigenReport rim(const Pencil& pencil, const Rectangle& region,
                const SearchConfig& config);

}  // namespace rim
