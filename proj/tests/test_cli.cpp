// Drives the installed CLI binary and checks its artifacts. The binary
// path comes from the build system via RIM_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rim/rim.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; /* stdout only */
};

RunResult run(const std::string& args) {
  const std::string command = std::string(RIM_CLI_PATH) + " " + args;
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rim_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("solve on example3 emits a deterministic eigenvalue document") {
  TempDir dir;
  const std::string out = dir.file("eigs.json");
  const std::string log = dir.file("regions.ndjson");
  const std::string meta = dir.file("meta.json");
  const std::string args =
      "solve --problem example3 --region 0.005,0.015,-0.004,0.004 "
      "--eps 1e-6 --quiet --out " + out + " --log " + log + " --meta " + meta;

  const RunResult first = run(args + " 2>/dev/null");
  REQUIRE(first.exit_code == 0);

  const json document = json::parse(slurp(out));
  CHECK(document["problem"] == "example3");
  CHECK(document["count"] == 1);
  CHECK(document["complete"] == true);
  const double re = document["eigenvalues"][0]["re"].get<double>();
  CHECK(std::abs(re - 0.01) <= 2e-6);
  CHECK(document["eigenvalues"][0]["cluster_box_count"].get<int>() >= 1);

  const json meta_doc = json::parse(slurp(meta));
  const auto regions = meta_doc["stats"]["regions_visited"].get<long long>();
  CHECK(regions > 0);

  /* One log line per visited region, all parseable. */
  std::ifstream log_in(log);
  std::string line;
  long long lines = 0;
  while (std::getline(log_in, line)) {
    const json record = json::parse(line);
    CHECK(record.contains("re_min"));
    CHECK(record.contains("chi"));
    CHECK(record.contains("admissible"));
    CHECK(record.contains("depth"));
    ++lines;
  }
  CHECK(lines == regions);

  /* Identical manifests give byte-identical eigenvalue documents. */
  const std::string first_bytes = slurp(out);
  const RunResult second = run(args + " 2>/dev/null");
  REQUIRE(second.exit_code == 0);
  CHECK(slurp(out) == first_bytes);
}

TEST_CASE("solve reports max-depth exhaustion with exit code 3") {
  TempDir dir;
  const RunResult r = run(
      "solve --problem example3 --region 0.005,0.015,-0.004,0.004 "
      "--eps 1e-9 --max-depth 3 --quiet --out " + dir.file("e.json") +
      " 2>/dev/null");
  CHECK(r.exit_code == 3);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run("solve --problem example3 2>/dev/null").exit_code != 0);
  CHECK(run("frobnicate 2>/dev/null").exit_code != 0);
  CHECK(run("solve --problem bogus --region 0,1,0,1 2>/dev/null").exit_code != 0);
}

TEST_CASE("oracle subcommands emit the reference values") {
  const RunResult disc = run("oracle disc-te --kmax 6 2>/dev/null");
  REQUIRE(disc.exit_code == 0);
  const json roots = json::parse(disc.output);
  REQUIRE(roots["count"].get<int>() >= 3);
  CHECK(std::abs(roots["roots"][0]["lambda"].get<double>() - 3.952) <= 2e-3);

  const RunResult empty = run("oracle disc-te --kmax 0.5 2>/dev/null");
  REQUIRE(empty.exit_code == 0);
  CHECK(json::parse(empty.output)["count"] == 0);

  const RunResult zero = run("oracle bessel-zero --m 0 2>/dev/null");
  REQUIRE(zero.exit_code == 0);
  const json zeros = json::parse(zero.output);
  CHECK(std::abs(zeros["zeros"][0].get<double>() - 2.404825557695773) <= 1e-12);
}

TEST_CASE("export writes loadable matrix market files") {
  TempDir dir;
  const std::string a = dir.file("a.mtx");
  const std::string b = dir.file("b.mtx");
  const std::string mesh = dir.file("mesh.txt");
  const RunResult r = run("export --problem te-square --h 0.2 --quiet --out-a " +
                          a + " --out-b " + b + " --mesh " + mesh +
                          " 2>/dev/null");
  REQUIRE(r.exit_code == 0);

  rim_pencil* pencil = nullptr;
  REQUIRE(rim_pencil_load_matrix_market(a.c_str(), b.c_str(), &pencil) ==
          RIM_OK);
  /* n=5 grid: 36 vertices, 20 boundary, 16 interior: dim 2*16+20. */
  CHECK(rim_pencil_dim(pencil) == 52);
  rim_pencil_free(pencil);

  std::ifstream mesh_in(mesh);
  int vertices = 0, triangles = 0;
  mesh_in >> vertices >> triangles;
  CHECK(vertices == 36);
  CHECK(triangles == 50);
}
