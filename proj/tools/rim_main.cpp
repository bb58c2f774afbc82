// Command-line front end for the rim shared library: run the recursive
// contour-integral search on built-in problems or user matrices, print the
// Bessel oracles, export assembled pencils.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 search hit
// max_depth and the report is partial.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rim/rim.h"

using nlohmann::ordered_json;

namespace {

struct MeshOptions {
  double h = 0.05;
  double jitter = 0.0;
  unsigned long long seed = 0;
  double radius = 0.5;
  double refraction = 16.0;
};

struct SolveOptions {
  std::string problem;
  std::string path_a, path_b;
  MeshOptions mesh;
  int example3_size = 100;
  int example3_ones = 20;
  int wilkinson_n = 40;
  std::vector<double> region;
  rim_search_config config = rim_search_config_default();
  std::string out_path;    /* eigenvalue document; empty = stdout */
  std::string log_path;    /* line-delimited region log */
  std::string meta_path;   /* run metadata */
  bool quiet = false;
};

[[noreturn]] void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(1);
}

void check(rim_status status, const std::string& what) {
  if (status != RIM_OK)
    fail(what + ": " + rim_status_name(status) + " (" + rim_last_error() + ")");
}

using PencilPtr = std::unique_ptr<rim_pencil, decltype(&rim_pencil_free)>;
using MeshPtr = std::unique_ptr<rim_mesh, decltype(&rim_mesh_free)>;
using ReportPtr = std::unique_ptr<rim_report, decltype(&rim_report_free)>;

MeshPtr build_mesh(const std::string& problem, const MeshOptions& options) {
  rim_mesh* mesh = nullptr;
  if (problem == "te-disc")
    check(rim_mesh_disc(options.radius, options.h, &mesh), "mesh");
  else
    check(rim_mesh_unit_square(options.h, options.jitter, options.seed, &mesh),
          "mesh");
  return MeshPtr(mesh, &rim_mesh_free);
}

PencilPtr build_pencil(const SolveOptions& options, ordered_json* problem_meta) {
  rim_pencil* pencil = nullptr;
  const std::string& problem = options.problem;
  if (problem == "example3") {
    check(rim_pencil_example3(options.example3_size, options.example3_ones,
                              &pencil), "example3");
  } else if (problem == "wilkinson") {
    check(rim_pencil_wilkinson(options.wilkinson_n, &pencil), "wilkinson");
  } else if (problem == "files") {
    if (options.path_a.empty() || options.path_b.empty())
      fail("--problem files requires --a and --b");
    check(rim_pencil_load_matrix_market(options.path_a.c_str(),
                                        options.path_b.c_str(), &pencil),
          "load");
  } else if (problem == "te-disc" || problem == "te-square" ||
             problem == "neumann-square") {
    MeshPtr mesh = build_mesh(problem, options.mesh);
    if (problem == "neumann-square")
      check(rim_pencil_neumann(mesh.get(), &pencil), "neumann pencil");
    else
      check(rim_pencil_transmission(mesh.get(), options.mesh.refraction,
                                    &pencil), "transmission pencil");
    if (problem_meta) {
      (*problem_meta)["mesh"] = {
          {"vertices", rim_mesh_vertex_count(mesh.get())},
          {"triangles", rim_mesh_triangle_count(mesh.get())},
          {"boundary_vertices", rim_mesh_boundary_count(mesh.get())},
          {"h", rim_mesh_size(mesh.get())}};
    }
  } else {
    fail("unknown problem '" + problem +
         "' (expected te-disc | te-square | neumann-square | example3 | "
         "wilkinson | files)");
  }
  return PencilPtr(pencil, &rim_pencil_free);
}

ordered_json config_json(const rim_search_config& config) {
  return {{"epsilon", config.epsilon},
          {"num_vectors", config.num_vectors},
          {"amplifier", config.amplifier},
          {"threshold", config.threshold > 0.0 ? config.threshold
                                               : config.amplifier / 10.0},
          {"seed", config.seed},
          {"max_depth", config.max_depth}};
}

void write_document(const ordered_json& document, const std::string& path) {
  if (path.empty()) {
    std::cout << document.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) fail(path + ": cannot open for writing");
  out << document.dump(2) << "\n";
}

int run_solve(const SolveOptions& options) {
  if (options.region.size() != 4)
    fail("--region needs re_min,re_max,im_min,im_max");
  rim_rect region = {options.region[0], options.region[1], options.region[2],
                     options.region[3]};

  ordered_json problem_meta;
  PencilPtr pencil = build_pencil(options, &problem_meta);

  const auto t0 = std::chrono::steady_clock::now();
  rim_report* raw_report = nullptr;
  const rim_status status =
      rim_solve(pencil.get(), region, &options.config, &raw_report);
  const auto t1 = std::chrono::steady_clock::now();
  if (status != RIM_OK && status != RIM_ERR_MAX_DEPTH)
    fail(std::string("solve: ") + rim_status_name(status) + " (" +
         rim_last_error() + ")");
  ReportPtr report(raw_report, &rim_report_free);

  ordered_json eigs = ordered_json::array();
  const int count = rim_report_eigenvalue_count(report.get());
  for (int i = 0; i < count; ++i) {
    double re = 0.0, im = 0.0;
    int boxes = 0;
    rim_report_eigenvalue(report.get(), i, &re, &im, &boxes);
    eigs.push_back({{"re", re}, {"im", im}, {"cluster_box_count", boxes}});
  }
  ordered_json document = {{"problem", options.problem},
                           {"dim", rim_pencil_dim(pencil.get())},
                           {"region", {{"re_min", region.re_min},
                                       {"re_max", region.re_max},
                                       {"im_min", region.im_min},
                                       {"im_max", region.im_max}}},
                           {"config", config_json(options.config)},
                           {"complete", rim_report_complete(report.get()) == 1},
                           {"count", count},
                           {"eigenvalues", eigs}};
  write_document(document, options.out_path);

  if (!options.log_path.empty()) {
    std::ofstream log(options.log_path);
    if (!log) fail(options.log_path + ": cannot open for writing");
    const int visits = rim_report_visit_count(report.get());
    std::vector<double> proj(static_cast<size_t>(options.config.num_vectors));
    std::vector<double> reproj(proj.size());
    for (int i = 0; i < visits; ++i) {
      const rim_region_record record = rim_report_visit(report.get(), i);
      const int j_count =
          rim_report_visit_norms(report.get(), i, proj.data(), reproj.data(),
                                 static_cast<int>(proj.size()));
      ordered_json line = {{"re_min", record.rect.re_min},
                           {"re_max", record.rect.re_max},
                           {"im_min", record.rect.im_min},
                           {"im_max", record.rect.im_max},
                           {"depth", record.depth},
                           {"chi", record.chi},
                           {"admissible", record.admissible == 1}};
      ordered_json norms = ordered_json::array();
      for (int j = 0; j < j_count && j < static_cast<int>(proj.size()); ++j)
        norms.push_back({proj[static_cast<size_t>(j)],
                         reproj[static_cast<size_t>(j)]});
      line["norms"] = norms;
      log << line.dump() << "\n";
    }
  }

  if (!options.meta_path.empty()) {
    unsigned long long factorizations = 0, solves = 0, regions = 0;
    int degenerate = 0;
    rim_report_stats(report.get(), &factorizations, &solves, &regions,
                     &degenerate);
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    ordered_json meta = {{"problem", options.problem},
                         {"seed", options.config.seed},
                         {"config", config_json(options.config)},
                         {"stats", {{"factorizations", factorizations},
                                    {"solves", solves},
                                    {"regions_visited", regions},
                                    {"degenerate_nodes", degenerate}}},
                         {"timings", {{"solve_ms", elapsed_ms}}},
                         {"complete", rim_report_complete(report.get()) == 1}};
    if (!problem_meta.is_null()) meta["problem_detail"] = problem_meta;
    write_document(meta, options.meta_path);
  }

  if (!options.quiet) {
    std::cerr << "found " << count << " eigenvalue(s), "
              << rim_report_box_count(report.get()) << " terminal box(es)\n";
  }
  if (status == RIM_ERR_MAX_DEPTH) {
    std::cerr << "warning: max_depth exceeded, report is partial\n";
    return 3;
  }
  return 0;
}

int run_oracle_disc_te(double k_max, int m_max, const std::string& out_path) {
  std::vector<rim_te_root> roots(4096);
  const int count = rim_oracle_disc_te(k_max, m_max, roots.data(),
                                       static_cast<int>(roots.size()));
  if (count < 0)
    fail(std::string("oracle: ") +
         rim_status_name(static_cast<rim_status>(-count)) + " (" +
         rim_last_error() + ")");
  ordered_json list = ordered_json::array();
  for (int i = 0; i < count && i < static_cast<int>(roots.size()); ++i)
    list.push_back({{"m", roots[static_cast<size_t>(i)].m},
                    {"k", roots[static_cast<size_t>(i)].k},
                    {"lambda", roots[static_cast<size_t>(i)].lambda}});
  write_document({{"oracle", "disc-te"},
                  {"k_max", k_max},
                  {"m_max", m_max},
                  {"count", count},
                  {"roots", list}},
                 out_path);
  return 0;
}

int run_oracle_bessel_zero(int m, int count, const std::string& out_path) {
  std::vector<double> zeros(static_cast<size_t>(std::max(count, 1)));
  const int found =
      rim_bessel_j_zeros(m, count, zeros.data(), static_cast<int>(zeros.size()));
  if (found < 0)
    fail(std::string("oracle: ") +
         rim_status_name(static_cast<rim_status>(-found)) + " (" +
         rim_last_error() + ")");
  ordered_json list = ordered_json::array();
  for (int i = 0; i < found && i < static_cast<int>(zeros.size()); ++i)
    list.push_back(zeros[static_cast<size_t>(i)]);
  write_document({{"oracle", "bessel-zero"}, {"m", m}, {"zeros", list}},
                 out_path);
  return 0;
}

int run_export(const SolveOptions& options, const std::string& out_a,
               const std::string& out_b, const std::string& mesh_path) {
  ordered_json problem_meta;
  if (options.problem == "files") fail("export: nothing to do for 'files'");

  if (!mesh_path.empty()) {
    if (options.problem == "example3" || options.problem == "wilkinson")
      fail("export: --mesh applies to FEM problems only");
    MeshPtr mesh = build_mesh(options.problem, options.mesh);
    check(rim_mesh_save_text(mesh.get(), mesh_path.c_str()), "mesh export");
  }
  PencilPtr pencil = build_pencil(options, &problem_meta);
  check(rim_pencil_save_matrix_market(pencil.get(), out_a.c_str(),
                                      out_b.c_str()), "export");
  if (!options.quiet)
    std::cerr << "wrote " << out_a << " and " << out_b << " (dim "
              << rim_pencil_dim(pencil.get()) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recursive contour-integral eigenvalue search"};
  app.require_subcommand(1);

  SolveOptions options;

  auto add_problem_flags = [&options](CLI::App* cmd) {
    cmd->add_option("--problem", options.problem,
                    "te-disc | te-square | neumann-square | example3 | "
                    "wilkinson | files")
        ->required();
    cmd->add_option("--a", options.path_a, "Matrix Market file for A");
    cmd->add_option("--b", options.path_b, "Matrix Market file for B");
    cmd->add_option("--h", options.mesh.h, "mesh cell size", true);
    cmd->add_option("--jitter", options.mesh.jitter,
                    "interior vertex jitter fraction", true);
    cmd->add_option("--mesh-seed", options.mesh.seed, "jitter seed", true);
    cmd->add_option("--radius", options.mesh.radius, "disc radius", true);
    cmd->add_option("--n-index", options.mesh.refraction,
                    "index of refraction", true);
    cmd->add_option("--size", options.example3_size, "example3 dimension",
                    true);
    cmd->add_option("--num-ones", options.example3_ones,
                    "example3 trailing ones in B", true);
    cmd->add_option("--n", options.wilkinson_n, "wilkinson dimension", true);
  };

  CLI::App* solve = app.add_subcommand("solve", "locate eigenvalues in a region");
  add_problem_flags(solve);
  solve->add_option("--region", options.region,
                    "re_min,re_max,im_min,im_max")
      ->required()
      ->delimiter(',')
      ->expected(4);
  solve->add_option("--eps", options.config.epsilon,
                    "terminal region size", true);
  solve->add_option("--num-vectors", options.config.num_vectors,
                    "random probe vectors J", true);
  solve->add_option("--amplifier", options.config.amplifier, "amplifier K",
                    true);
  solve->add_option("--threshold", options.config.threshold,
                    "admissibility cutoff (default K/10)");
  solve->add_option("--seed", options.config.seed, "probe vector seed", true);
  solve->add_option("--max-depth", options.config.max_depth,
                    "recursion bound", true);
  solve->add_option("--out", options.out_path,
                    "eigenvalue document path (default stdout)");
  solve->add_option("--log", options.log_path, "region log path (NDJSON)");
  solve->add_option("--meta", options.meta_path, "run metadata path");
  solve->add_flag("--quiet", options.quiet, "suppress progress on stderr");

  CLI::App* oracle = app.add_subcommand("oracle", "analytic reference values");
  oracle->require_subcommand(1);
  double k_max = 6.0;
  int m_max = 20;
  int zero_m = 0;
  int zero_count = 1;
  std::string oracle_out;
  CLI::App* disc_te = oracle->add_subcommand(
      "disc-te", "exact transmission eigenvalues of the radius-1/2 disc, n=16");
  disc_te->add_option("--kmax", k_max, "largest wavenumber", true);
  disc_te->add_option("--mmax", m_max, "largest angular order", true);
  disc_te->add_option("--out", oracle_out, "output path (default stdout)");
  CLI::App* bessel_zero =
      oracle->add_subcommand("bessel-zero", "positive zeros of J_m");
  bessel_zero->add_option("--m", zero_m, "Bessel order", true);
  bessel_zero->add_option("--count", zero_count, "number of zeros", true);
  bessel_zero->add_option("--out", oracle_out, "output path (default stdout)");

  CLI::App* export_cmd =
      app.add_subcommand("export", "write A and B as Matrix Market files");
  add_problem_flags(export_cmd);
  std::string out_a, out_b, mesh_path;
  export_cmd->add_option("--out-a", out_a, "output path for A")->required();
  export_cmd->add_option("--out-b", out_b, "output path for B")->required();
  export_cmd->add_option("--mesh", mesh_path, "also dump the mesh as text");
  export_cmd->add_flag("--quiet", options.quiet, "suppress progress on stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(options);
    if (oracle->parsed()) {
      if (disc_te->parsed()) return run_oracle_disc_te(k_max, m_max, oracle_out);
      return run_oracle_bessel_zero(zero_m, zero_count, oracle_out);
    }
    if (export_cmd->parsed()) return run_export(options, out_a, out_b, mesh_path);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return 0;
}
