#include "rim/rim.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bessel.hpp"
#include "errors.hpp"
#include "fem.hpp"
#include "matrix_market.hpp"
#include "mesh.hpp"
#include "pencil.hpp"
#include "search.hpp"

namespace {

constexpr int kVersionMajor = 1;
constexpr int kVersionMinor = 0;
constexpr int kVersionPatch = 0;

thread_local std::string g_last_error = "no error";

rim_status status_of(rim::ErrorCode code) {
  using rim::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return RIM_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return RIM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::singular_shift: return RIM_ERR_SINGULAR_SHIFT;
    case ErrorCode::parse: return RIM_ERR_PARSE;
    case ErrorCode::io: return RIM_ERR_IO;
    case ErrorCode::solver: return RIM_ERR_SOLVER;
    case ErrorCode::max_depth: return RIM_ERR_MAX_DEPTH;
    case ErrorCode::mesh: return RIM_ERR_MESH;
    case ErrorCode::internal: return RIM_ERR_INTERNAL;
  }
  return RIM_ERR_INTERNAL;
}

/* Runs the body and converts exceptions to statuses. */
template <typename Fn>
rim_status guarded(Fn&& fn) {
  try {
    fn();
    return RIM_OK;
  } catch (const rim::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RIM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RIM_ERR_INTERNAL;
  }
}

rim_status invalid(const char* message) {
  g_last_error = message;
  return RIM_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct rim_pencil {
  rim::Pencil value;
};

struct rim_mesh {
  rim::Mesh value;
};

struct rim_report {
  rim::EigenReport value;
  std::vector<const rim::RegionNode*> visits; /* flattened, DFS order */
};

extern "C" {

const char* rim_status_name(rim_status status) {
  switch (status) {
    case RIM_OK: return "ok";
    case RIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RIM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case RIM_ERR_SINGULAR_SHIFT: return "singular shift";
    case RIM_ERR_PARSE: return "parse error";
    case RIM_ERR_IO: return "i/o error";
    case RIM_ERR_SOLVER: return "solver failure";
    case RIM_ERR_MAX_DEPTH: return "max depth exceeded";
    case RIM_ERR_MESH: return "mesh error";
    case RIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rim_last_error(void) { return g_last_error.c_str(); }

void rim_version(int* major, int* minor, int* patch) {
  if (major) *major = kVersionMajor;
  if (minor) *minor = kVersionMinor;
  if (patch) *patch = kVersionPatch;
}

/* ---------------------------------------------------------------- pencils */

rim_status rim_pencil_example3(int size, int num_ones, rim_pencil** out) {
  if (!out) return invalid("rim_pencil_example3: out is NULL");
  return guarded([&] {
    *out = new rim_pencil{rim::example3_pencil(size, num_ones)};
  });
}

rim_status rim_pencil_wilkinson(int n, rim_pencil** out) {
  if (!out) return invalid("rim_pencil_wilkinson: out is NULL");
  return guarded([&] { *out = new rim_pencil{rim::wilkinson_pencil(n)}; });
}

rim_status rim_pencil_diagonal(const double* re, const double* im, int count,
                               rim_pencil** out) {
  if (!out) return invalid("rim_pencil_diagonal: out is NULL");
  if (!re) return invalid("rim_pencil_diagonal: re is NULL");
  if (count < 1) return invalid("rim_pencil_diagonal: count must be >= 1");
  return guarded([&] {
    std::vector<rim::Complex> eigs(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
      eigs[static_cast<size_t>(i)] = rim::Complex(re[i], im ? im[i] : 0.0);
    *out = new rim_pencil{rim::diagonal_pencil(eigs)};
  });
}

rim_status rim_pencil_load_matrix_market(const char* path_a, const char* path_b,
                                         rim_pencil** out) {
  if (!out || !path_a || !path_b)
    return invalid("rim_pencil_load_matrix_market: NULL argument");
  return guarded([&] {
    *out = new rim_pencil{rim::load_matrix_market(path_a, path_b)};
  });
}

rim_status rim_pencil_save_matrix_market(const rim_pencil* pencil,
                                         const char* path_a,
                                         const char* path_b) {
  if (!pencil || !path_a || !path_b)
    return invalid("rim_pencil_save_matrix_market: NULL argument");
  return guarded([&] { rim::save_matrix_market(pencil->value, path_a, path_b); });
}

int rim_pencil_dim(const rim_pencil* pencil) {
  return pencil ? static_cast<int>(pencil->value.dim()) : 0;
}

int rim_pencil_is_complex(const rim_pencil* pencil) {
  return pencil && pencil->value.is_complex() ? 1 : 0;
}

void rim_pencil_free(rim_pencil* pencil) { delete pencil; }

/* ------------------------------------------------------------ meshes, FEM */

rim_status rim_mesh_unit_square(double h, double jitter,
                                unsigned long long seed, rim_mesh** out) {
  if (!out) return invalid("rim_mesh_unit_square: out is NULL");
  return guarded([&] {
    *out = new rim_mesh{rim::square_mesh(h, jitter, seed)};
  });
}

rim_status rim_mesh_disc(double radius, double h, rim_mesh** out) {
  if (!out) return invalid("rim_mesh_disc: out is NULL");
  return guarded([&] { *out = new rim_mesh{rim::disc_mesh(radius, h)}; });
}

int rim_mesh_vertex_count(const rim_mesh* mesh) {
  return mesh ? mesh->value.vertex_count() : 0;
}

int rim_mesh_triangle_count(const rim_mesh* mesh) {
  return mesh ? mesh->value.triangle_count() : 0;
}

int rim_mesh_boundary_count(const rim_mesh* mesh) {
  return mesh ? mesh->value.boundary_count() : 0;
}

double rim_mesh_size(const rim_mesh* mesh) {
  return mesh ? mesh->value.mesh_size_h : 0.0;
}

rim_status rim_mesh_save_text(const rim_mesh* mesh, const char* path) {
  if (!mesh || !path) return invalid("rim_mesh_save_text: NULL argument");
  return guarded([&] { rim::save_mesh_text(mesh->value, path); });
}

void rim_mesh_free(rim_mesh* mesh) { delete mesh; }

rim_status rim_pencil_transmission(const rim_mesh* mesh,
                                   double refraction_index, rim_pencil** out) {
  if (!mesh || !out) return invalid("rim_pencil_transmission: NULL argument");
  return guarded([&] {
    const rim::FemMatrices fem =
        rim::assemble(mesh->value, rim::constant_refraction(refraction_index));
    *out = new rim_pencil{rim::te_pencil(fem)};
  });
}

rim_status rim_pencil_neumann(const rim_mesh* mesh, rim_pencil** out) {
  if (!mesh || !out) return invalid("rim_pencil_neumann: NULL argument");
  return guarded([&] {
    const rim::FemMatrices fem =
        rim::assemble(mesh->value, rim::constant_refraction(16.0));
    *out = new rim_pencil{rim::neumann_pencil(fem)};
  });
}

/* ----------------------------------------------------------------- search */

rim_search_config rim_search_config_default(void) {
  rim_search_config config;
  config.epsilon = 1e-3;
  config.num_vectors = 3;
  config.amplifier = 10.0;
  config.threshold = 0.0;
  config.seed = 1;
  config.max_depth = 60;
  return config;
}

rim_status rim_solve(const rim_pencil* pencil, rim_rect region,
                     const rim_search_config* config, rim_report** out) {
  if (!pencil || !out) return invalid("rim_solve: NULL argument");
  const rim_search_config defaults = rim_search_config_default();
  const rim_search_config* c = config ? config : &defaults;
  return guarded([&] {
    rim::SearchConfig sc;
    sc.epsilon = c->epsilon;
    sc.num_vectors = c->num_vectors;
    sc.amplifier = c->amplifier;
    sc.threshold = c->threshold;
    sc.seed = c->seed;
    sc.max_depth = c->max_depth;
    rim::Rectangle rect(region.re_min, region.re_max, region.im_min,
                        region.im_max);
    auto report = std::make_unique<rim_report>();
    report->value = rim::rim(pencil->value, rect, sc);

    report->visits.reserve(report->value.stats.regions_visited);
    const std::function<void(const rim::RegionNode&)> flatten =
        [&](const rim::RegionNode& node) {
          report->visits.push_back(&node);
          for (const rim::RegionNode& child : node.children) flatten(child);
        };
    flatten(report->value.tree);

    const bool complete = report->value.complete;
    *out = report.release();
    if (!complete)
      throw rim::Error(rim::ErrorCode::max_depth,
                       "rim_solve: max_depth exceeded, report is partial");
  });
}

int rim_report_eigenvalue_count(const rim_report* report) {
  return report ? static_cast<int>(report->value.eigenvalues.size()) : 0;
}

void rim_report_eigenvalue(const rim_report* report, int i, double* re,
                           double* im, int* box_count) {
  if (!report || i < 0 || i >= rim_report_eigenvalue_count(report)) {
    if (re) *re = 0.0;
    if (im) *im = 0.0;
    if (box_count) *box_count = 0;
    return;
  }
  const size_t idx = static_cast<size_t>(i);
  if (re) *re = report->value.eigenvalues[idx].real();
  if (im) *im = report->value.eigenvalues[idx].imag();
  if (box_count) *box_count = report->value.cluster_box_counts[idx];
}

int rim_report_box_count(const rim_report* report) {
  return report ? static_cast<int>(report->value.boxes.size()) : 0;
}

rim_rect rim_report_box(const rim_report* report, int i) {
  rim_rect rect = {0.0, 0.0, 0.0, 0.0};
  if (!report || i < 0 || i >= rim_report_box_count(report)) return rect;
  const rim::Rectangle& box = report->value.boxes[static_cast<size_t>(i)];
  rect.re_min = box.re_min;
  rect.re_max = box.re_max;
  rect.im_min = box.im_min;
  rect.im_max = box.im_max;
  return rect;
}

int rim_report_complete(const rim_report* report) {
  return report && report->value.complete ? 1 : 0;
}

void rim_report_stats(const rim_report* report,
                      unsigned long long* factorizations,
                      unsigned long long* solves,
                      unsigned long long* regions_visited,
                      int* degenerate_nodes) {
  const rim::SearchStats stats =
      report ? report->value.stats : rim::SearchStats{};
  if (factorizations) *factorizations = stats.factorizations;
  if (solves) *solves = stats.solves;
  if (regions_visited) *regions_visited = stats.regions_visited;
  if (degenerate_nodes) *degenerate_nodes = stats.degenerate_nodes;
}

int rim_report_visit_count(const rim_report* report) {
  return report ? static_cast<int>(report->visits.size()) : 0;
}

rim_region_record rim_report_visit(const rim_report* report, int i) {
  rim_region_record record;
  std::memset(&record, 0, sizeof(record));
  if (!report || i < 0 || i >= rim_report_visit_count(report)) return record;
  const rim::RegionNode& node = *report->visits[static_cast<size_t>(i)];
  record.rect = {node.rect.re_min, node.rect.re_max, node.rect.im_min,
                 node.rect.im_max};
  record.depth = node.depth;
  record.chi = node.chi;
  record.admissible = node.admissible ? 1 : 0;
  record.terminal = node.terminal ? 1 : 0;
  return record;
}

int rim_report_visit_norms(const rim_report* report, int i, double* proj_norms,
                           double* reproj_norms, int cap) {
  if (!report || i < 0 || i >= rim_report_visit_count(report)) return 0;
  const rim::RegionNode& node = *report->visits[static_cast<size_t>(i)];
  const int j_count = static_cast<int>(node.ind.per_vector.size());
  for (int j = 0; j < j_count && j < cap; ++j) {
    if (proj_norms) proj_norms[j] = node.ind.per_vector[static_cast<size_t>(j)].first;
    if (reproj_norms)
      reproj_norms[j] = node.ind.per_vector[static_cast<size_t>(j)].second;
  }
  return j_count;
}

void rim_report_free(rim_report* report) { delete report; }

/* ---------------------------------------------------------------- oracles */

rim_status rim_bessel_j(int m, double x, double* out) {
  if (!out) return invalid("rim_bessel_j: out is NULL");
  return guarded([&] { *out = rim::bessel_j(m, x); });
}

int rim_bessel_j_zeros(int m, int count, double* out, int capacity) {
  if (!out || capacity < 0) return -RIM_ERR_INVALID_ARGUMENT;
  std::vector<double> zeros;
  const rim_status status = guarded([&] { zeros = rim::bessel_j_zeros(m, count); });
  if (status != RIM_OK) return -static_cast<int>(status);
  const int written = std::min<int>(static_cast<int>(zeros.size()), capacity);
  for (int i = 0; i < written; ++i) out[i] = zeros[static_cast<size_t>(i)];
  return static_cast<int>(zeros.size());
}

int rim_oracle_disc_te(double k_max, int m_max, rim_te_root* out,
                       int capacity) {
  if (capacity < 0 || (capacity > 0 && !out)) return -RIM_ERR_INVALID_ARGUMENT;
  std::vector<rim::DiscTeRoot> roots;
  const rim_status status =
      guarded([&] { roots = rim::disc_te_roots(k_max, m_max); });
  if (status != RIM_OK) return -static_cast<int>(status);
  const int written = std::min<int>(static_cast<int>(roots.size()), capacity);
  for (int i = 0; i < written; ++i) {
    out[i].m = roots[static_cast<size_t>(i)].order_m;
    out[i].k = roots[static_cast<size_t>(i)].k;
    out[i].lambda = roots[static_cast<size_t>(i)].lambda;
  }
  return static_cast<int>(roots.size());
}

} /* extern "C" */
