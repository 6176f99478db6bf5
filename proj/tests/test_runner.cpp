//! \file test_runner.cpp
//! \brief Run orchestration: solve/converge drivers, emitters, and the reference cache.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mapweno/runner.hpp"

using namespace mapweno;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::uint64_t fnv1a_ref(const unsigned char* bytes, std::size_t size) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_CASE("shortest-round-trip float formatting") {
  CHECK(format_g17(1.0) == "1");
  CHECK(format_g17(0.1) == "0.10000000000000001");
  const double third = 1.0 / 3.0;
  CHECK(std::strtod(format_g17(third).c_str(), nullptr) == third);
  CHECK(std::strtod(format_g17(1e-40).c_str(), nullptr) == 1e-40);
}

TEST_CASE("reference tabulation covers every stencil weight") {
  const auto& rows = tabulated_q_reference();
  REQUIRE(rows.size() == 45);
  std::size_t idx = 0;
  for (int r = 1; r <= 9; ++r)
    for (int s = 0; s < r; ++s, ++idx) {
      CHECK(rows[idx].r == r);
      CHECK(rows[idx].s == s);
    }
  CHECK(rows[0].omega_crit == -1.0);  // alpha-only sentinel
  CHECK(rows[0].alpha == 0.0001);
  CHECK(rows[3].omega_crit == 0.156515839);
  CHECK(rows[3].q_max == 0.574903653);
}

TEST_CASE("regenerated flat-segment table flags exactly the two stale reference cells") {
  const char* path = "runner_appendix_tmp.csv";
  write_table("appendixA", path);
  const auto rows = lines_of(slurp(path));
  REQUIRE(rows.size() == 46);
  CHECK(rows[0] == "r,s,d,omega_crit,q_max,alpha,agrees_ref");
  std::vector<std::string> disagreeing;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() >= 2 && rows[i].substr(rows[i].size() - 2) == ",0")
      disagreeing.push_back(rows[i].substr(0, 4));
  REQUIRE(disagreeing.size() == 2);
  CHECK(disagreeing[0] == "9,0,");
  CHECK(disagreeing[1] == "9,1,");
  std::remove(path);
}

TEST_CASE("predicted-order table") {
  const char* path = "runner_orders_tmp.csv";
  write_table("table1", path);
  const auto rows = lines_of(slurp(path));
  REQUIRE(rows.size() == 45);  // header + r = 2..9 with r rows each
  CHECK(rows[0] == "r,ncp,js,m1,m2,im,k_im_min,maim,k_maim_min");
  bool found = false;
  for (const auto& row : rows)
    if (row.rfind("3,1,", 0) == 0) {
      CHECK(row == "3,1,3,5,5,5,2,5,1");
      found = true;
    }
  CHECK(found);
  std::remove(path);
  CHECK_THROWS_AS(write_table("bogus", path), std::invalid_argument);
}

TEST_CASE("map dump samples the three stencil curves") {
  const char* path = "runner_map_tmp.csv";
  write_map_dump(make_scheme("js"), 3, path);
  auto rows = lines_of(slurp(path));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "omega,g0,g1,g2");
  // identity mapping: all three curves equal omega
  CHECK(rows[2] == "0.5,0.5,0.5,0.5");

  write_map_dump(make_scheme("maim1"), 5, path);
  rows = lines_of(slurp(path));
  REQUIRE(rows.size() == 6);
  std::istringstream mid(rows[3]);
  std::string tok;
  std::getline(mid, tok, ',');
  CHECK(std::strtod(tok.c_str(), nullptr) == 0.5);
  std::getline(mid, tok, ',');  // g0, d = 0.1
  std::getline(mid, tok, ',');  // g1, d = 0.6
  CHECK(std::strtod(tok.c_str(), nullptr) ==
        doctest::Approx(0.59999989177373136777).epsilon(1e-15));
  std::remove(path);
  CHECK_THROWS_AS(write_map_dump(make_scheme("js"), 0, path), std::invalid_argument);
}

TEST_CASE("advection solve reports norms, oscillation, and artifacts") {
  RunConfig cfg;
  cfg.problem = "lae-sine";
  cfg.scheme = make_scheme("maim1");
  cfg.n = 40;
  cfg.t_final = 0.4;
  cfg.out_field = "runner_field_tmp.csv";
  cfg.out_report = "runner_report_tmp.txt";
  const RunReport rep = run_solve(cfg);
  CHECK_FALSE(rep.blow_up);
  CHECK(rep.t_reached == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(rep.n_steps > 0);
  CHECK(rep.has_norms);
  CHECK(rep.norms.l1 < 1e-4);
  CHECK(rep.has_osc);
  CHECK(rep.mass_drift < 1e-12);
  CHECK_FALSE(rep.has_range);
  CHECK(rep.wall_seconds > 0.0);

  const std::string field = slurp(cfg.out_field);
  CHECK(field.rfind("x,u\n", 0) == 0);
  CHECK(lines_of(field).size() == 41);
  const std::string report = slurp(cfg.out_report);
  CHECK(report.find("problem=lae-sine\n") != std::string::npos);
  CHECK(report.find("scheme=maim1\n") != std::string::npos);
  CHECK(report.find("cfl=scaled\n") != std::string::npos);
  CHECK(report.find("l1=") != std::string::npos);
  CHECK(report.find("mass_drift=") != std::string::npos);
  std::remove(cfg.out_field.c_str());
  std::remove(cfg.out_report.c_str());
}

TEST_CASE("1D gas solve tracks positivity extrema") {
  RunConfig cfg;
  cfg.problem = "blast";
  cfg.scheme = make_scheme("js");
  cfg.n = 64;
  cfg.t_final = 0.0005;
  cfg.out_report = "runner_blast_tmp.txt";
  const RunReport rep = run_solve(cfg);
  CHECK_FALSE(rep.blow_up);
  CHECK(rep.n_steps > 0);
  CHECK(rep.min_rho > 0.0);
  CHECK(rep.min_p > 0.0);
  CHECK_FALSE(rep.has_norms);
  CHECK(rep.mass_drift < 1e-10);
  const std::string report = slurp(cfg.out_report);
  CHECK(report.find("n=64\n") != std::string::npos);
  CHECK(report.find("min_rho=") != std::string::npos);
  CHECK(report.find("min_p=") != std::string::npos);
  std::remove(cfg.out_report.c_str());
}

TEST_CASE("2D gas solve reports the density range") {
  RunConfig cfg;
  cfg.problem = "riemann2d";
  cfg.scheme = make_scheme("js");
  cfg.nx = 24;
  cfg.ny = 24;
  cfg.t_final = 0.01;
  cfg.out_field = "runner_field2d_tmp.csv";
  const RunReport rep = run_solve(cfg);
  CHECK_FALSE(rep.blow_up);
  CHECK(rep.n_steps > 0);
  CHECK(rep.has_range);
  CHECK(rep.rho_range.lo > 0.4);
  CHECK(rep.rho_range.hi < 2.5);
  const std::string field = slurp(cfg.out_field);
  CHECK(field.rfind("x,y,rho,rhou,rhov,E\n", 0) == 0);
  CHECK(lines_of(field).size() == 24 * 24 + 1);
  std::remove(cfg.out_field.c_str());
}

TEST_CASE("convergence study reproduces the frozen fifth-order pair") {
  RunConfig cfg;
  cfg.problem = "lae-sine";
  cfg.scheme = make_scheme("js");
  cfg.grids = {20, 40};
  cfg.out_report = "runner_conv_tmp.csv";
  const auto rows = run_converge(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].err.l1 == doctest::Approx(2.9531123835898512e-3).epsilon(1e-9));
  CHECK(rows[1].err.l1 == doctest::Approx(9.2665530764231293e-5).epsilon(1e-9));
  CHECK(rows[1].order.l1 == doctest::Approx(4.994).epsilon(0.01));
  const auto csv = lines_of(slurp(cfg.out_report));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "n,l1,l1_order,l2,l2_order,linf,linf_order");
  std::remove(cfg.out_report.c_str());

  RunConfig bad = cfg;
  bad.grids.clear();
  CHECK_THROWS_AS(run_converge(bad), ConfigError);
  bad = cfg;
  bad.problem = "blast";
  CHECK_THROWS_AS(run_converge(bad), ConfigError);
}

TEST_CASE("binary reference cache: read path, checksum, regeneration") {
  namespace fs = std::filesystem;
  const std::string dir = "runner_cache_tmp";
  setenv("MAPWENO_CACHE_DIR", dir.c_str(), 1);
  Problem p = make_problem("blast");
  p.t_final = 0.001;
  const int n = 64;
  const std::string file = dir + "/blast_n64.bin";

  const CellField first = load_or_generate_reference(p, n);
  REQUIRE(fs::exists(file));
  const double original = first(0, 0);
  const double mid_orig = first(6, 2);  // energy near the initial jump evolves fast

  // forge a valid cache entry with a shifted first value: the loader must
  // return the forged data, proving the file is actually read
  {
    std::fstream io(file, std::ios::in | std::ios::out | std::ios::binary);
    REQUIRE(io.good());
    const std::size_t payload_off = 8 + 4 + 5 + 4 + 4 + 8;
    const std::size_t payload_bytes = static_cast<std::size_t>(n) * 3 * sizeof(double);
    std::vector<unsigned char> payload(payload_bytes);
    io.seekg(payload_off);
    io.read(reinterpret_cast<char*>(payload.data()), payload_bytes);
    double v = 0.0;
    std::memcpy(&v, payload.data(), 8);
    v += 1.0;
    std::memcpy(payload.data(), &v, 8);
    const std::uint64_t sum = fnv1a_ref(payload.data(), payload_bytes);
    io.seekp(payload_off);
    io.write(reinterpret_cast<const char*>(payload.data()), payload_bytes);
    io.write(reinterpret_cast<const char*>(&sum), 8);
  }
  const CellField forged = load_or_generate_reference(p, n);
  CHECK(forged(0, 0) == original + 1.0);

  // corrupt the checksum: the loader must reject the file and regenerate
  {
    std::fstream io(file, std::ios::in | std::ios::out | std::ios::binary);
    io.seekp(-1, std::ios::end);
    char last = 0;
    io.seekg(-1, std::ios::end);
    io.get(last);
    last = static_cast<char>(last ^ 0x5a);
    io.seekp(-1, std::ios::end);
    io.put(last);
  }
  const CellField healed = load_or_generate_reference(p, n);
  CHECK(healed(0, 0) == original);

  // a different t_final must invalidate the entry even at the same path
  p.t_final = 0.002;
  const CellField longer = load_or_generate_reference(p, n);
  CHECK(longer(6, 2) != mid_orig);

  CHECK_THROWS_AS(load_or_generate_reference(make_problem("riemann2d"), 100),
                  std::invalid_argument);
  fs::remove_all(dir);
  unsetenv("MAPWENO_CACHE_DIR");
}
