// End-to-end tests of the airystable CLI: exit codes, CSV contracts,
// determinism, and value spot checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = AIRYSTABLE_CLI_PATH;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "airystable_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  const int st = std::system(cmd.c_str());
  return WEXITSTATUS(st);
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("airy: single-point value and header contract") {
  const fs::path out = work_dir() / "airy0.csv";
  REQUIRE(run("airy --alpha 3 --x-min 0 --x-max 0 --step 1 --out " +
              out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "value", "abs_err_bound",
                                            "terms"});
  CHECK(std::fabs(std::stod(rows[1][1]) - 0.3550280538878172) < 1e-10);
  // 17-significant-digit round trip
  const double v = std::stod(rows[1][1]);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  CHECK(std::stod(buf) == v);
}

TEST_CASE("airy: odd n=1 equals alpha=3 columns") {
  const fs::path a = work_dir() / "odd.csv";
  const fs::path b = work_dir() / "frac.csv";
  REQUIRE(run("airy --n 1 --x-min -2 --x-max 2 --step 0.25 --out " +
              a.string()) == 0);
  REQUIRE(run("airy --alpha 3 --x-min -2 --x-max 2 --step 0.25 --out " +
              b.string()) == 0);
  const auto ra = read_csv(a), rb = read_csv(b);
  REQUIRE(ra.size() == rb.size());
  for (size_t i = 1; i < ra.size(); ++i)
    CHECK(std::fabs(std::stod(ra[i][1]) - std::stod(rb[i][1])) <= 1e-12);
}

TEST_CASE("airy: invalid grid exits 2 without a file") {
  const fs::path out = work_dir() / "bad.csv";
  CHECK(run("airy --alpha 3 --x-min 0 --x-max 1 --step 0 --out " +
            out.string()) == 2);
  CHECK(!fs::exists(out));
  CHECK(run("airy --x-min 0 --x-max 1 --step 0.5") == 2);  // no order
  CHECK(run("airy --alpha 3 --n 1 --x-min 0 --x-max 1 --step 0.5") == 2);
}

TEST_CASE("density: closed-form spot value and normalization") {
  const fs::path out = work_dir() / "dens.csv";
  REQUIRE(run("density --alpha 2 --theta 1 --t 1 --x-min 0 --x-max 0 "
              "--step 1 --out " +
              out.string()) == 0);
  const auto rows = read_csv(out);
  CHECK(rows[0][1] == "density");
  CHECK(std::fabs(std::stod(rows[1][1]) - 0.19947114020071635) < 1e-10);

  const fs::path grid = work_dir() / "dens_grid.csv";
  REQUIRE(run("density --alpha 3 --theta 0.5 --t 1 --x-min -5 --x-max 5 "
              "--step 0.01 --out " +
              grid.string()) == 0);
  const auto g = read_csv(grid);
  double riemann = 0.0;
  for (size_t i = 1; i < g.size(); ++i) {
    const double v = std::stod(g[i][1]);
    REQUIRE(std::isfinite(v));
    riemann += v * 0.01;
  }
  CHECK(std::fabs(riemann - 1.0) < 0.05);
}

TEST_CASE("density: series condition violations exit 2") {
  CHECK(run("density --alpha 1.5 --theta 0.5 --t 1 --x-min 0 --x-max 1 "
            "--step 0.5") == 2);
  CHECK(run("density --alpha 2 --theta 0.5 --t 1 --x-min 0 --x-max 1 "
            "--step 0.5") == 2);
}

TEST_CASE("stable: mirrored tables for opposite skewness") {
  const fs::path a = work_dir() / "sp.csv";
  const fs::path b = work_dir() / "sm.csv";
  REQUIRE(run("stable --nu 1.5 --beta 0.5 --sigma 1 --mu 0 --t 1 "
              "--x-min -3 --x-max 3 --step 0.25 --out " +
              a.string()) == 0);
  REQUIRE(run("stable --nu 1.5 --beta -0.5 --sigma 1 --mu 0 --t 1 "
              "--x-min -3 --x-max 3 --step 0.25 --out " +
              b.string()) == 0);
  const auto ra = read_csv(a), rb = read_csv(b);
  REQUIRE(ra.size() == rb.size());
  CHECK(ra[0] == std::vector<std::string>{"x", "pdf"});
  const size_t n = ra.size();
  for (size_t i = 1; i < n; ++i) {
    const double va = std::stod(ra[i][1]);
    const double vb = std::stod(rb[n - i][1]);  // mirrored row
    CHECK(std::fabs(va - vb) <= 1e-13);
  }
}

TEST_CASE("stable: nu = 1 exits 2 pointing at cauchy") {
  CHECK(run("stable --nu 1 --beta 0.5 --x-min 0 --x-max 1 --step 0.5") == 2);
}

TEST_CASE("cauchy: spot value, mode location, Riemann mass") {
  const fs::path out = work_dir() / "cauchy.csv";
  REQUIRE(run("cauchy --alpha 2 --t 1 --x-min -50 --x-max 50 --step 0.01 "
              "--out " +
              out.string()) == 0);
  const auto rows = read_csv(out);
  double best_x = 0.0, best_v = -1.0, riemann = 0.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    const double v = std::stod(rows[i][1]);
    riemann += v * 0.01;
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
    if (x == 0.0) CHECK(std::fabs(v - 0.22507907903927651) < 1e-12);
  }
  CHECK(std::fabs(best_x + std::sin(M_PI / 4.0)) <= 0.011);
  CHECK(std::fabs(riemann - 1.0) < 0.01);
}

TEST_CASE("sample: determinism and parameter validation") {
  const fs::path a = work_dir() / "s1.csv";
  const fs::path b = work_dir() / "s2.csv";
  const std::string args =
      "sample subordinator --theta 0.5 --t 1 --n 10 --seed 42 --out ";
  REQUIRE(run(args + a.string()) == 0);
  REQUIRE(run(args + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));  // byte-identical
  const auto rows = read_csv(a);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"index", "value"});
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][1]) > 0.0);

  CHECK(run("sample stable --nu 1 --beta 0 --n 10 --seed 1") == 2);
  CHECK(run("sample nonsense --n 10 --seed 1") == 2);
  const fs::path c = work_dir() / "s3.csv";
  REQUIRE(run("sample stable --nu 1.5 --beta 0.5 --n 100 --seed 7 --out " +
              c.string()) == 0);
  CHECK(read_csv(c).size() == 101);
}

TEST_CASE("verify: unknown suite exits 2, airy suite passes") {
  CHECK(run("verify nonsense") == 2);
  const fs::path out = work_dir() / "verify_airy.csv";
  CHECK(run("verify airy --out " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() > 5);
  CHECK(rows[0] == std::vector<std::string>{"check_id", "target", "actual",
                                            "tolerance", "pass"});
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][4] == "1");
}
