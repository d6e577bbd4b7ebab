#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "infsup/shapefile.hpp"
#include "infsup/shapes.hpp"

// Drives the installed binary through a shell. The build system points
// INFSUP_CLI at the executable and INFSUP_SHAPES_DIR at the sample shapes.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("INFSUP_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string shapes_dir() {
  const char* p = std::getenv("INFSUP_SHAPES_DIR");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string sample(const std::string& name) {
  return "'" + shapes_dir() + "/" + name + "'";
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::trunc);
    out << content;
  }
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
  std::string quoted() const { return "'" + path.string() + "'"; }
};

struct ScopedEnv {
  std::string name;
  explicit ScopedEnv(const std::string& n, const std::string& value) : name(n) {
    setenv(name.c_str(), value.c_str(), 1);
  }
  ~ScopedEnv() { unsetenv(name.c_str()); }
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("bounds prints a table with tagged rows") {
  const RunResult r = run("bounds " + sample("disk.json"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.rfind("kind", 0) == 0);
  CHECK(split_lines(r.out)[0].find("disk") != std::string::npos);
  CHECK(r.out.find("beta_lower_proven") != std::string::npos);
  CHECK(r.out.find("0.7071067811865") != std::string::npos);
  CHECK(r.out.find("normalized") != std::string::npos);
  CHECK(r.out.find("proven") != std::string::npos);
  CHECK(r.out.find("reference: exact Friedrichs constant 1") !=
        std::string::npos);
}

TEST_CASE("bounds --json round-trips through the report serializer") {
  const RunResult r = run("bounds --json " + sample("square.json"));
  REQUIRE(r.exit_code == 0);
  const infsup::json j = infsup::json::parse(r.out);
  CHECK(j.at("kind") == "regular_polygon");
  CHECK(j.at("options").at("grid") == 4096);
  const infsup::BoundReport rep = infsup::report_from_json(j.at("report"));

  const infsup::BoundReport direct =
      infsup::compute_report_for(infsup::RegularPolygonSpec{4, 1.0, {}});
  CHECK(rep.M == direct.M);
  CHECK(rep.m == direct.m);
  CHECK(rep.beta_lower_proven == direct.beta_lower_proven);
  CHECK(rep.M == Catch::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-10));

  REQUIRE(j.contains("reference"));
  CHECK(j.at("reference").at("c_lower").get<double>() ==
        Catch::Approx(1.0 / (0.5 - 1.0 / infsup::pi)));
}

TEST_CASE("repeated runs emit identical bytes") {
  const std::string cmd = "bounds --json " + sample("ellipse_1_2.json");
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult p1 = run("plot " + sample("star_polygon.json"));
  const RunResult p2 = run("plot " + sample("star_polygon.json"));
  REQUIRE(p1.exit_code == 0);
  CHECK(p1.out == p2.out);
}

TEST_CASE("every sample shape file computes cleanly") {
  for (const auto& entry : fs::directory_iterator(shapes_dir())) {
    if (entry.path().extension() != ".json") continue;
    const RunResult r =
        run("bounds '" + entry.path().string() + "'");
    INFO(entry.path().filename().string() << "\n" << r.out);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("exit codes separate the failure classes") {
  SECTION("missing shape file") {
    const RunResult r = run("bounds /no/such/file.json");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("cannot open") != std::string::npos);
  }
  SECTION("unparseable shape file") {
    TempFile f("infsup_cli_bad.json", "not json at all");
    CHECK(run("bounds " + f.quoted()).exit_code == 2);
  }
  SECTION("schema violation names the field") {
    TempFile f("infsup_cli_field.json", R"({"kind":"ellipse","params":{"a":1}})");
    const RunResult r = run("bounds " + f.quoted());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("params.b") != std::string::npos);
  }
  SECTION("center outside the domain") {
    TempFile f("infsup_cli_far_center.json",
               R"({"kind":"disk","params":{"radius":1.0},"center":[2.0,0.0]})");
    CHECK(run("bounds " + f.quoted()).exit_code == 3);
  }
  SECTION("unwritable output path") {
    const RunResult r =
        run("plot " + sample("disk.json") + " -o /no/such/dir/out.svg");
    CHECK(r.exit_code == 4);
  }
  SECTION("unknown family") {
    CHECK(run("counterexample pentagon 0.1").exit_code == 2);
  }
  SECTION("malformed sweep range") {
    CHECK(run("sweep cupid 3:2:5").exit_code == 2);
    CHECK(run("sweep cupid 0:1:5").exit_code == 2);
    CHECK(run("sweep cupid 1:2:0").exit_code == 2);
    CHECK(run("sweep cupid nonsense").exit_code == 2);
  }
  SECTION("counterexample needs a parameter or a sweep") {
    CHECK(run("counterexample cupid").exit_code == 2);
  }
  SECTION("no subcommand") {
    CHECK(run("").exit_code == 2);
  }
}

TEST_CASE("check-star reports radii in input units") {
  const RunResult r = run("check-star " + sample("disk_offcenter.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("star-shaped: yes") != std::string::npos);
  // disk of radius 1 about center (0.4, 0): min tangent distance 0.6,
  // farthest boundary point 1.4, both in input units
  auto value_of = [&](const std::string& name) {
    for (const auto& line : split_lines(r.out)) {
      if (line.rfind(name, 0) == 0)
        return std::strtod(line.c_str() + name.size(), nullptr);
    }
    FAIL("row '" << name << "' not found in:\n" << r.out);
    return 0.0;
  };
  CHECK(value_of("rho_max") == Catch::Approx(0.6).epsilon(1e-12));
  CHECK(value_of("r_min") == Catch::Approx(1.4).epsilon(1e-12));

  const RunResult star = run("check-star " + sample("star_polygon.json"));
  CHECK(star.exit_code == 0);
  CHECK(star.out.find("star-shaped: yes") != std::string::npos);
}

TEST_CASE("counterexample verdicts and threshold") {
  const RunResult hit = run("counterexample cupid 2.58");
  REQUIRE(hit.exit_code == 0);
  CHECK(hit.out.find("REFUTED") != std::string::npos);

  const RunResult miss = run("counterexample cupid 2.0");
  REQUIRE(miss.exit_code == 0);
  CHECK(miss.out.find("consistent") != std::string::npos);

  const RunResult th = run("counterexample cupid 2.58 --threshold");
  REQUIRE(th.exit_code == 0);
  CHECK(th.out.find("threshold: claimed bound fails for parameters above 2.57") !=
        std::string::npos);
}

TEST_CASE("sweep emits full-precision CSV") {
  const RunResult r = run("sweep stadium 0.2:0.4:3");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "parameter,omega,m,M,beta_lower_proven,beta_lower_hp_claimed,"
        "beta_upper,verdict");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 8);
    for (size_t k = 0; k + 1 < fields.size(); ++k) {
      char* end = nullptr;
      std::strtod(fields[k].c_str(), &end);
      CHECK(*end == '\0');
    }
    CHECK(fields.back() == "consistent");
  }
  // 17 significant digits survive the round trip
  CHECK(split_csv(lines[1])[0] == "0.20000000000000001");

  const RunResult ce = run("counterexample octagon --sweep 0.003:0.005:2");
  REQUIRE(ce.exit_code == 0);
  const auto ce_lines = split_lines(ce.out);
  REQUIRE(ce_lines.size() == 3);
  CHECK(ce_lines[0] ==
        "parameter,omega,claimed_beta_sq,proven_beta_sq_upper,margin,verdict");
  CHECK(split_csv(ce_lines[1]).back() == "refuted");
  CHECK(split_csv(ce_lines[2]).back() == "consistent");
}

TEST_CASE("sweep writes to a file when asked") {
  const fs::path out = fs::temp_directory_path() / "infsup_cli_sweep.csv";
  std::error_code ec;
  fs::remove(out, ec);
  const RunResult r =
      run("sweep cupid 1:2:2 -o '" + out.string() + "'");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("parameter,", 0) == 0);
  fs::remove(out, ec);
}

TEST_CASE("plot emits a standalone SVG document") {
  const RunResult r = run("plot " + sample("hexagon.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
}

TEST_CASE("environment variables override file options, flags beat both") {
  TempFile f("infsup_cli_opts.json",
             R"({"kind":"disk","options":{"grid":256,"tol":1e-9}})");
  SECTION("file options apply on their own") {
    const RunResult r = run("bounds --json " + f.quoted());
    REQUIRE(r.exit_code == 0);
    const infsup::json j = infsup::json::parse(r.out);
    CHECK(j.at("options").at("grid") == 256);
    CHECK(j.at("options").at("tol").get<double>() == 1e-9);
  }
  SECTION("environment beats the file") {
    ScopedEnv env("INFSUP_GRID", "512");
    const RunResult r = run("bounds --json " + f.quoted());
    REQUIRE(r.exit_code == 0);
    CHECK(infsup::json::parse(r.out).at("options").at("grid") == 512);
  }
  SECTION("flags beat the environment") {
    ScopedEnv env("INFSUP_GRID", "512");
    const RunResult r = run("bounds --json --grid 64 " + f.quoted());
    REQUIRE(r.exit_code == 0);
    CHECK(infsup::json::parse(r.out).at("options").at("grid") == 64);
  }
  SECTION("invalid environment values are rejected") {
    ScopedEnv env("INFSUP_GRID", "banana");
    CHECK(run("bounds " + sample("disk.json")).exit_code == 2);
    ScopedEnv tol("INFSUP_TOL", "2.0");
    CHECK(run("check-star " + sample("disk.json")).exit_code == 2);
  }
}
