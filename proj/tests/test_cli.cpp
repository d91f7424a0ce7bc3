#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flags.hpp"
#include "report.hpp"
#include "runners.hpp"

#include <complex>
#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace wsqrt::cli;
namespace fs = std::filesystem;

namespace {

RunConfig small_config(const std::string& tag) {
  RunConfig cfg;
  cfg.seed = 4242;
  cfg.workers = 2;
  cfg.output_dir = (fs::temp_directory_path() / ("wsqrt_test_" + tag)).string();
  cfg.phase_n = 20000;
  cfg.variation_n = 20000;
  cfg.variation_ladder = {1000, 4000, 16000};
  cfg.residual_paths = 400;
  cfg.reg_n = 200;
  cfg.reg_paths = 400;
  cfg.reg_ladder = {10, 100, 1000};
  cfg.dx = 0.1;
  cfg.dt = 2e-3;
  cfg.t_final = 1.0;
  cfg.moment_samples = 5;
  cfg.map_n = 16;
  cfg.map_ladder = {16, 64};
  fs::create_directories(cfg.output_dir);
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("complex flag parsing") {
  CHECK(parse_complex_pair("0.5") == std::complex<double>{0.5, 0.0});
  CHECK(parse_complex_pair("0.5,-1.25") == std::complex<double>{0.5, -1.25});
  CHECK(parse_beta("schrodinger") == std::complex<double>{0.0, 0.5});
  CHECK(parse_beta("0,0.5") == std::complex<double>{0.0, 0.5});
  CHECK_THROWS_AS(parse_complex_pair("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_pair("1.0,xyz"), std::invalid_argument);
}

TEST_CASE("doubles render deterministically") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == format_double(1.0 / 3.0));
  CHECK(format_complex({0.0, 0.5}) == "0,0.5");
}

TEST_CASE("csv rendering matches the schema") {
  Table t;
  t.columns = {"t", "norm", "mean", "variance"};
  t.rows = {{"0", "1", "0", "0.5"}};
  CHECK(render_csv(t) == "t,norm,mean,variance\n0,1,0,0.5\n");
}

TEST_CASE("report json carries the schema keys and sorts stably") {
  Report r;
  r.command = "verify ito";
  r.config = {{"mu0", "1/2"}};
  r.checks.push_back({"sample", true, "a", "a", nullptr});
  r.elapsed_seconds = 1.25;
  r.workers_used = 4;
  const json j = r.to_json();
  CHECK(j.contains("checks"));
  CHECK(j.contains("command"));
  CHECK(j.contains("config"));
  CHECK(j.contains("timing"));
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["name"] == "sample");
  CHECK(j["timing"]["workers"] == 4);
}

TEST_CASE("ito runner reproduces the reduced expression") {
  RunConfig cfg = small_config("ito");
  const Report r = run_verify_ito(cfg);
  CHECK(r.all_passed());
  REQUIRE(!r.checks.empty());
  CHECK(r.checks[0].observed == "1/4·sign(dW) + dW");
}

TEST_CASE("phase runner passes on a small sample") {
  const Report r = run_verify_phase(small_config("phase"));
  CHECK(r.all_passed());
  CHECK(!r.checks.empty());
}

TEST_CASE("variation runner passes on a small sample") {
  const Report r = run_verify_variation(small_config("variation"));
  CHECK(r.all_passed());
}

TEST_CASE("regularize runner writes its table") {
  RunConfig cfg = small_config("regularize");
  const Report r = run_regularize(cfg);
  CHECK(r.all_passed());
  CHECK(fs::exists(fs::path(cfg.output_dir) / "regularize_table.csv"));
}

TEST_CASE("pde runner emits moment and wave tables with exact headers") {
  RunConfig cfg = small_config("pde");
  const Report r = run_pde(cfg);
  CHECK(r.all_passed());
  const std::string moments = slurp(fs::path(cfg.output_dir) / "pde_moments.csv");
  CHECK(moments.rfind("t,norm,mean,variance\n", 0) == 0);
  const std::string wave = slurp(fs::path(cfg.output_dir) / "pde_wave.csv");
  CHECK(wave.rfind("x,re_psi,im_psi\n", 0) == 0);
}

TEST_CASE("pde runner with json format writes json tables") {
  RunConfig cfg = small_config("pde_json");
  cfg.format = "json";
  const Report r = run_pde(cfg);
  CHECK(r.all_passed());
  const json moments = json::parse(slurp(fs::path(cfg.output_dir) / "pde_moments.json"));
  CHECK(moments["columns"] == json::array({"t", "norm", "mean", "variance"}));
  CHECK(!moments["rows"].empty());
}

TEST_CASE("map runner emits the pmf table") {
  RunConfig cfg = small_config("map");
  const Report r = run_map(cfg);
  CHECK(r.all_passed());
  const std::string table = slurp(fs::path(cfg.output_dir) / "map_table.csv");
  CHECK(table.rfind("k,pmf,abs_psi_sq\n", 0) == 0);
}

TEST_CASE("every runner produces a nonempty checks array") {
  CHECK(!run_verify_ito(small_config("c1")).checks.empty());
  CHECK(!run_verify_phase(small_config("c2")).checks.empty());
  CHECK(!run_verify_variation(small_config("c3")).checks.empty());
  CHECK(!run_regularize(small_config("c4")).checks.empty());
  CHECK(!run_pde(small_config("c5")).checks.empty());
  CHECK(!run_map(small_config("c6")).checks.empty());
}

TEST_CASE("runner reports are worker-count invariant") {
  RunConfig one = small_config("w1");
  one.workers = 1;
  RunConfig eight = small_config("w8");
  eight.workers = 8;
  eight.output_dir = one.output_dir;  // identical config block
  const json a = run_verify_variation(one).to_json();
  const json b = run_verify_variation(eight).to_json();
  json sa = a, sb = b;
  sa.erase("timing");
  sb.erase("timing");
  CHECK(sa == sb);
}

TEST_CASE("bad subcommand parameters are rejected before work starts") {
  RunConfig cfg = small_config("bad");
  cfg.phase_n = 0;
  CHECK_THROWS_AS(run_verify_phase(cfg), std::invalid_argument);
  RunConfig cfg2 = small_config("bad2");
  cfg2.moment_samples = 2;
  CHECK_THROWS_AS(run_pde(cfg2), std::invalid_argument);
  RunConfig cfg3 = small_config("bad3");
  cfg3.beta = "frob";
  CHECK_THROWS_AS(run_pde(cfg3), std::invalid_argument);
}
