#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "doctest.h"
#include "rim/rim.h"

TEST_CASE("version is reported") {
  int major = -1, minor = -1, patch = -1;
  rim_version(&major, &minor, &patch);
  CHECK(major >= 1);
  CHECK(minor >= 0);
  CHECK(patch >= 0);
}

TEST_CASE("status names are stable strings") {
  CHECK(std::strcmp(rim_status_name(RIM_OK), "ok") == 0);
  CHECK(std::strcmp(rim_status_name(RIM_ERR_SINGULAR_SHIFT),
                    "singular shift") == 0);
}

TEST_CASE("pencil construction and properties through the C surface") {
  rim_pencil* pencil = nullptr;
  REQUIRE(rim_pencil_example3(100, 20, &pencil) == RIM_OK);
  CHECK(rim_pencil_dim(pencil) == 100);
  CHECK(rim_pencil_is_complex(pencil) == 0);
  rim_pencil_free(pencil);

  CHECK(rim_pencil_example3(10, 20, &pencil) == RIM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(rim_last_error()) > 0);

  CHECK(rim_pencil_wilkinson(41, &pencil) == RIM_ERR_INVALID_ARGUMENT);
  CHECK(rim_pencil_example3(100, 20, nullptr) == RIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("solve localizes a diagonal spectrum end to end") {
  const double re[3] = {0.25, 0.5, 3.0};
  const double im[3] = {0.25, 0.75, 3.0};
  rim_pencil* pencil = nullptr;
  REQUIRE(rim_pencil_diagonal(re, im, 3, &pencil) == RIM_OK);
  CHECK(rim_pencil_is_complex(pencil) == 1);

  rim_search_config config = rim_search_config_default();
  config.epsilon = 1e-5;
  rim_rect region = {0.0, 1.0, 0.0, 1.0};
  rim_report* report = nullptr;
  REQUIRE(rim_solve(pencil, region, &config, &report) == RIM_OK);

  REQUIRE(rim_report_eigenvalue_count(report) == 2);
  double er = 0.0, ei = 0.0;
  int boxes = 0;
  rim_report_eigenvalue(report, 0, &er, &ei, &boxes);
  CHECK(std::abs(er - 0.25) <= 2e-5);
  CHECK(std::abs(ei - 0.25) <= 2e-5);
  CHECK(boxes >= 1);
  rim_report_eigenvalue(report, 1, &er, &ei, &boxes);
  CHECK(std::abs(er - 0.5) <= 2e-5);
  CHECK(std::abs(ei - 0.75) <= 2e-5);

  CHECK(rim_report_complete(report) == 1);
  CHECK(rim_report_box_count(report) >= 2);

  unsigned long long factorizations = 0, solves = 0, regions = 0;
  int degenerate = 0;
  rim_report_stats(report, &factorizations, &solves, &regions, &degenerate);
  CHECK(regions > 0);
  CHECK(factorizations >= 8);
  CHECK(solves > 0);
  CHECK(rim_report_visit_count(report) == static_cast<int>(regions));

  const rim_region_record root = rim_report_visit(report, 0);
  CHECK(root.depth == 0);
  CHECK(root.rect.re_min == 0.0);
  CHECK(root.admissible == 1);

  double proj[3], reproj[3];
  const int j_count = rim_report_visit_norms(report, 0, proj, reproj, 3);
  CHECK(j_count == config.num_vectors);
  CHECK(proj[0] > 0.0);

  rim_report_free(report);
  rim_pencil_free(pencil);
}

TEST_CASE("max depth produces a partial report and distinct status") {
  const double re[1] = {0.5};
  rim_pencil* pencil = nullptr;
  REQUIRE(rim_pencil_diagonal(re, nullptr, 1, &pencil) == RIM_OK);
  rim_search_config config = rim_search_config_default();
  config.epsilon = 1e-9;
  config.max_depth = 3;
  rim_rect region = {0.0, 1.0, -0.5, 0.5};
  rim_report* report = nullptr;
  CHECK(rim_solve(pencil, region, &config, &report) == RIM_ERR_MAX_DEPTH);
  REQUIRE(report != nullptr);
  CHECK(rim_report_complete(report) == 0);
  rim_report_free(report);
  rim_pencil_free(pencil);
}

TEST_CASE("matrix market io through the C surface") {
  rim_pencil* pencil = nullptr;
  REQUIRE(rim_pencil_example3(12, 5, &pencil) == RIM_OK);
  const char* path_a = "/tmp/rim_capi_a.mtx";
  const char* path_b = "/tmp/rim_capi_b.mtx";
  REQUIRE(rim_pencil_save_matrix_market(pencil, path_a, path_b) == RIM_OK);

  rim_pencil* loaded = nullptr;
  REQUIRE(rim_pencil_load_matrix_market(path_a, path_b, &loaded) == RIM_OK);
  CHECK(rim_pencil_dim(loaded) == 12);
  rim_pencil_free(loaded);
  rim_pencil_free(pencil);
  std::remove(path_a);
  std::remove(path_b);

  CHECK(rim_pencil_load_matrix_market("/nonexistent/a.mtx", "/nonexistent/b.mtx",
                                      &loaded) == RIM_ERR_IO);
}

TEST_CASE("meshes and FEM pencils through the C surface") {
  rim_mesh* mesh = nullptr;
  REQUIRE(rim_mesh_unit_square(0.25, 0.0, 0, &mesh) == RIM_OK);
  CHECK(rim_mesh_vertex_count(mesh) == 25);
  CHECK(rim_mesh_triangle_count(mesh) == 32);
  CHECK(rim_mesh_boundary_count(mesh) == 16);
  CHECK(rim_mesh_size(mesh) > 0.25);

  rim_pencil* te = nullptr;
  REQUIRE(rim_pencil_transmission(mesh, 16.0, &te) == RIM_OK);
  CHECK(rim_pencil_dim(te) == 2 * 9 + 16);
  rim_pencil_free(te);

  rim_pencil* neumann = nullptr;
  REQUIRE(rim_pencil_neumann(mesh, &neumann) == RIM_OK);
  CHECK(rim_pencil_dim(neumann) == 25);
  rim_pencil_free(neumann);

  const char* mesh_path = "/tmp/rim_capi_mesh.txt";
  CHECK(rim_mesh_save_text(mesh, mesh_path) == RIM_OK);
  std::remove(mesh_path);
  rim_mesh_free(mesh);

  CHECK(rim_mesh_unit_square(2.0, 0.0, 0, &mesh) == RIM_ERR_INVALID_ARGUMENT);
  rim_mesh* disc = nullptr;
  REQUIRE(rim_mesh_disc(0.5, 0.25, &disc) == RIM_OK);
  CHECK(rim_mesh_boundary_count(disc) > 0);
  rim_mesh_free(disc);
}

TEST_CASE("oracles through the C surface") {
  double j0 = 0.0;
  REQUIRE(rim_bessel_j(0, 0.0, &j0) == RIM_OK);
  CHECK(j0 == 1.0);
  CHECK(rim_bessel_j(99, 0.0, &j0) == RIM_ERR_INVALID_ARGUMENT);

  double zeros[2] = {0, 0};
  const int found = rim_bessel_j_zeros(0, 2, zeros, 2);
  REQUIRE(found == 2);
  CHECK(std::abs(zeros[0] - 2.404825557695773) <= 1e-12);

  rim_te_root roots[64];
  const int count = rim_oracle_disc_te(6.0, 20, roots, 64);
  REQUIRE(count >= 3);
  CHECK(std::abs(roots[0].lambda - 3.952) <= 2e-3);

  const int none = rim_oracle_disc_te(0.5, 20, roots, 64);
  CHECK(none == 0);
}
