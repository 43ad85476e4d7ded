#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using testsupport::slurp;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("msoro_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const TempDir& tmp, const std::string& args,
              const std::string& env = "") {
  const fs::path out = tmp.path / "stdout.txt";
  const fs::path err = tmp.path / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + MSORO_CLI_PATH +
                          " " + args + " > " + out.string() + " 2> " +
                          err.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out.string());
  result.err = slurp(err.string());
  return result;
}

}  // namespace

TEST_CASE("solids list: table with the five-solid values") {
  TempDir tmp;
  const auto r = run(tmp, "solids list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cube") != std::string::npos);
  CHECK(r.out.find("0.866025") != std::string::npos);
  CHECK(r.out.find("70.528779") != std::string::npos);
  CHECK(r.out.find("138.189685") != std::string::npos);
}

TEST_CASE("solids list: json") {
  TempDir tmp;
  const auto r = run(tmp, "solids list --format json");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[1]["solid"] == "cube");
  CHECK(std::abs(j[1]["theta_deg"].get<double>() - 90.0) < 1e-9);
  CHECK(std::abs(j[4]["R_over_a"].get<double>() - 0.951057) < 1e-6);
}

TEST_CASE("topology: writes both files and reports the derived radius") {
  TempDir tmp;
  const auto svg = (tmp.path / "out.svg").string();
  const auto obj = (tmp.path / "out.obj").string();
  const auto r = run(tmp, "topology --solid cube --edge-length 110 "
                          "--amplitude 0.86 --samples 64 --planar " +
                              svg + " --sphere " + obj);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("R=95.26") != std::string::npos);
  CHECK(fs::exists(svg));
  CHECK(fs::exists(obj));
}

TEST_CASE("validation failures exit with 2") {
  TempDir tmp;
  CHECK(run(tmp, "topology --solid hexagon --planar x.svg").exit_code == 2);
  CHECK(run(tmp, "metrics --solid cube --amplitude 1.5").exit_code == 2);
  const auto r = run(tmp, "topology --solid hexagon --planar x.svg");
  CHECK(r.err.find("hexagon") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("domain failures exit with 3") {
  TempDir tmp;
  // No arc of radius 100 mm spans a 500 mm edge.
  const auto r = run(tmp, "cavity --edge-length 500 --curl-radius 100");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("metrics: json report with the derived fields") {
  TempDir tmp;
  const auto r = run(tmp, "metrics --solid cube --edge-length 110 "
                          "--amplitude 0.86 --samples 128 --format json");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["R_mm"].get<double>() - 95.262794) < 1e-4);
  CHECK(std::abs(j["circumradius_ratio"].get<double>() - 0.866025) < 1e-6);
  CHECK(j["feasible"].get<bool>());
  CHECK(j.contains("D_loco"));
  CHECK(j.contains("J"));
  CHECK(j["A_S_mm2"].get<double>() ==
        doctest::Approx(19006.6355).epsilon(1e-6));
}

TEST_CASE("metrics: table format") {
  TempDir tmp;
  const auto r = run(tmp, "metrics --solid tetrahedron --amplitude 0.4 "
                          "--samples 64 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("eps_intra") != std::string::npos);
  CHECK(r.out.find("eps_inter") != std::string::npos);
}

TEST_CASE("optimize: single solid json result") {
  TempDir tmp;
  const auto r = run(tmp, "optimize --solid cube --alpha 0.56 "
                          "--resolution 0.05 --samples 64");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["solid"] == "cube");
  CHECK(j["A_star"].get<double>() >= 0.0);
  CHECK(j["A_star"].get<double>() <= 1.0);
}

TEST_CASE("optimize: all five solids with trace files") {
  TempDir tmp;
  const auto trace = (tmp.path / "trace.csv").string();
  const auto out = (tmp.path / "opt.json").string();
  const auto r = run(tmp, "optimize --solid all --alpha 0.56 --resolution 0.1 "
                          "--samples 64 --trace " +
                              trace + " --output " + out);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(slurp(out));
  REQUIRE(j.size() == 5);
  CHECK(fs::exists(tmp.path / "trace_tetrahedron.csv"));
  CHECK(fs::exists(tmp.path / "trace_icosahedron.csv"));
  const auto csv = slurp((tmp.path / "trace_cube.csv").string());
  CHECK(csv.rfind("A,J,eps_inter,D_loco\n", 0) == 0);
}

TEST_CASE("cavity: json output reproduces the reference width") {
  TempDir tmp;
  const auto r = run(tmp, "cavity --solid cube --edge-length 110 "
                          "--curl-radius 190 --cavities 5 --cavity-height 20 "
                          "--limb-height 30 --obtuse-angle 70 "
                          "--profile outward_trapezoid --limb-length 100");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["width_mm"].get<double>() - 2.35) <= 0.01);
  CHECK(j["count"].get<int>() == 5);
  CHECK(j["cavity_polygons"].size() == 5);
}

TEST_CASE("cavity: svg output") {
  TempDir tmp;
  const auto svg = (tmp.path / "cavity.svg").string();
  const auto r = run(tmp, "cavity --svg " + svg);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(svg));
  CHECK(slurp(svg).find("<svg") != std::string::npos);
}

TEST_CASE("MSORO_OUTPUT_DIR resolves relative outputs") {
  TempDir tmp;
  const auto outdir = tmp.path / "outputs";
  fs::create_directories(outdir);
  const auto r =
      run(tmp, "topology --solid cube --amplitude 0.3 --samples 64 "
               "--planar rel.svg",
          "MSORO_OUTPUT_DIR=" + outdir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(outdir / "rel.svg"));
}

TEST_CASE("config round-trip: written config reproduces identical outputs") {
  TempDir tmp;
  const auto svg1 = (tmp.path / "first.svg").string();
  const auto obj1 = (tmp.path / "first.obj").string();
  const auto rep1 = (tmp.path / "first.json").string();
  const auto cfg = (tmp.path / "design.json").string();

  auto r = run(tmp, "export --solid dodecahedron --edge-length 73 "
                    "--amplitude 0.42 --samples 64 --write-config " +
                        cfg);
  CHECK(r.exit_code == 0);

  // Patch the output paths into the effective config and run from it.
  auto j = json::parse(slurp(cfg));
  CHECK(j["solid"] == "dodecahedron");
  CHECK(j["edge_length_mm"].get<double>() == doctest::Approx(73.0));
  j["outputs"]["planar_svg"] = svg1;
  j["outputs"]["sphere_obj"] = obj1;
  j["outputs"]["report_json"] = rep1;
  {
    std::ofstream out(cfg);
    out << j.dump(2);
  }
  r = run(tmp, "export --config " + cfg);
  CHECK(r.exit_code == 0);
  const auto bytes_svg = slurp(svg1);
  const auto bytes_obj = slurp(obj1);
  const auto bytes_rep = slurp(rep1);
  CHECK(!bytes_svg.empty());

  // Second run from the same config: byte-identical artifacts.
  r = run(tmp, "export --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(slurp(svg1) == bytes_svg);
  CHECK(slurp(obj1) == bytes_obj);
  CHECK(slurp(rep1) == bytes_rep);

  // Flags override the config file.
  const auto svg2 = (tmp.path / "second.svg").string();
  auto j2 = json::parse(slurp(cfg));
  j2["outputs"] = {{"planar_svg", svg2}};
  const auto cfg2 = (tmp.path / "design2.json").string();
  {
    std::ofstream out(cfg2);
    out << j2.dump(2);
  }
  r = run(tmp, "export --config " + cfg2 + " --edge-length 146");
  CHECK(r.exit_code == 0);
  CHECK(slurp(svg2).find("edge_length_mm=146.000000") != std::string::npos);
}

TEST_CASE("config file errors are validation errors") {
  TempDir tmp;
  const auto cfg = (tmp.path / "bad.json").string();
  {
    std::ofstream out(cfg);
    out << "{ not json";
  }
  CHECK(run(tmp, "metrics --config " + cfg).exit_code == 2);
  CHECK(run(tmp, "metrics --config /does/not/exist.json").exit_code == 2);
}
