#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "radmom/csvio.hpp"

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(RADMOM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST_CASE("exit codes follow the contract") {
  CHECK(run("verify --lmax 4") == 0);
  CHECK(run("verify --lmax 4 --tolerance-scale 1e-20") == 1);
  CHECK(run("no-such-command") == 2);
  CHECK(run("verify --lmax 0") == 2);
  CHECK(run("fig2 --gamma-points 10") == 2);
  CHECK(run("fig1 --gamma-points 101 --out /nonexistent-dir/x.csv") == 3);
  CHECK(run("spectrum-dump --lmax 1 --op Qz") == 2);
}

TEST_CASE("fig outputs are deterministic and round-trip") {
  const std::string p1 = "cli_fig2_a.csv", p2 = "cli_fig2_b.csv";
  REQUIRE(run("fig2 --gamma-max 4 --gamma-points 201 --out " + p1) == 0);
  REQUIRE(run("fig2 --gamma-max 4 --gamma-points 201 --out " + p2) == 0);
  CHECK(slurp(p1) == slurp(p2));

  const radmom::CsvTable t = radmom::read_csv(p1);
  REQUIRE(t.columns == std::vector<std::string>{"gamma", "signed_density"});
  REQUIRE(t.data[0].size() == 201);
  CHECK(t.data[1][100] == 0.0);              // gamma = 0
  CHECK(t.data[1][120] == -t.data[1][80]);   // oddness
  // full-precision round trip: rewrite and compare
  radmom::write_csv(p2, t);
  CHECK(radmom::read_csv(p2).data == t.data);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("fig1 header records the audit constants") {
  const std::string p = "cli_fig1.csv";
  REQUIRE(run("fig1 --gamma-max 4 --gamma-points 101 --out " + p) == 0);
  const radmom::CsvTable t = radmom::read_csv(p);
  CHECK(t.columns == std::vector<std::string>{"gamma", "pz_density", "piz_density"});
  const double ratio = std::strtod(t.get("raw_to_normalized_ratio").c_str(), nullptr);
  CHECK(std::abs(ratio - 2.5066282746310002) < 1e-12);
  CHECK(t.get("hbar") == "1");
  CHECK(std::abs(t.data[1][50] - 0.84882636315677168) < 1e-7);
  CHECK(std::abs(t.data[2][50] - 0.78539816339744828) < 1e-7);
  std::remove(p.c_str());
}

TEST_CASE("svg output is written for both figures") {
  for (const std::string cmd : {"fig1", "fig2"}) {
    const std::string p = "cli_" + cmd + ".svg";
    REQUIRE(run(cmd + " --gamma-max 4 --gamma-points 101 --format svg --out " + p) == 0);
    const std::string body = slurp(p);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("polyline") != std::string::npos);
    if (cmd == "fig1") {
      CHECK(body.find("p_z") != std::string::npos);
      CHECK(body.find("Pi_z") != std::string::npos);
      CHECK(body.find("stroke-dasharray") != std::string::npos);
    }
    std::remove(p.c_str());
  }
}

TEST_CASE("qcoeff emits the analytic column for l = 0") {
  const std::string p = "cli_q.csv";
  REQUIRE(run("qcoeff --l 0 --gamma-max 6 --gamma-points 121 --out " + p) == 0);
  radmom::CsvTable t = radmom::read_csv(p);
  REQUIRE(t.columns ==
          std::vector<std::string>{"gamma", "re_q", "im_q", "abs_sq", "analytic"});
  for (std::size_t i = 0; i < t.data[0].size(); ++i) {
    const double q2 = t.data[1][i] * t.data[1][i] + t.data[2][i] * t.data[2][i];
    CHECK(std::abs(t.data[3][i] - q2) < 1e-15);
    CHECK(std::abs(t.data[3][i] - t.data[4][i] * t.data[4][i]) < 1e-8);
  }
  CHECK(std::abs(t.data[3][60] - 0.7853982) < 1e-7);
  CHECK(std::abs(t.data[4][60] - 0.8862269) < 1e-7);

  REQUIRE(run("qcoeff --l 1 --gamma-max 6 --gamma-points 121 --out " + p) == 0);
  t = radmom::read_csv(p);
  REQUIRE(t.columns == std::vector<std::string>{"gamma", "re_q", "im_q", "abs_sq"});
  CHECK(t.data[3][60] <= 1e-16);
  std::remove(p.c_str());
}

TEST_CASE("spectrum dump lists the expected elements") {
  const std::string p = "cli_dump.csv";
  REQUIRE(run("spectrum-dump --lmax 1 --out " + p) == 0);
  const std::string body = slurp(p);
  CHECK(body.find("erz,1,0,0,0,0.577350269189625") != std::string::npos);
  CHECK(body.find("rPiz,1,0,0,0,0,0.57735026") != std::string::npos);
  // Lz at lmax = 1: only m = -1 and m = +1 are nonzero
  std::istringstream in(body);
  std::string line;
  int lz_rows = 0;
  while (std::getline(in, line))
    if (line.rfind("Lz,", 0) == 0) ++lz_rows;
  CHECK(lz_rows == 2);
  std::remove(p.c_str());

  REQUIRE(run("spectrum-dump --lmax 1 --op Lz --out " + p) == 0);
  const std::string only = slurp(p);
  CHECK(only.find("Lz,") != std::string::npos);
  CHECK(only.find("erz,") == std::string::npos);
  std::remove(p.c_str());
}
