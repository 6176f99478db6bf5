//! \file mapweno_main.cpp
//! \brief Command-line driver: solve, converge, map-dump, and tables subcommands.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mapweno/runner.hpp"

namespace {

std::vector<int> parse_grid_list(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    const int n = std::stoi(csv.substr(pos, next - pos));
    if (!out.empty() && n <= out.back())
      throw mapweno::ConfigError("grids must be strictly increasing");
    out.push_back(n);
    pos = next + 1;
  }
  return out;
}

void print_report(const mapweno::RunReport& rep) {
  std::printf("t_reached=%.6g  steps=%ld  wall=%.2fs\n", rep.t_reached, rep.n_steps,
              rep.wall_seconds);
  if (rep.blow_up) std::printf("blow-up at t=%.6g\n", rep.blow_up_time);
  if (rep.has_norms)
    std::printf("L1=%.6e  L2=%.6e  Linf=%.6e\n", rep.norms.l1, rep.norms.l2, rep.norms.linf);
  if (rep.has_osc)
    std::printf("overshoot=%.3e  undershoot=%.3e\n", rep.osc.over, rep.osc.under);
  if (rep.has_range) std::printf("rho in [%.6g, %.6g]\n", rep.rho_range.lo, rep.rho_range.hi);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume WENO solver and benchmark driver"};
  app.require_subcommand(1);

  std::string config_path, scheme_spec, out_field, out_report, grids_csv;
  int n_override = 0;

  CLI::App* solve = app.add_subcommand("solve", "advance one case and report run metrics");
  solve->add_option("--config", config_path, "run configuration file")->required();
  solve->add_option("--scheme", scheme_spec, "scheme override, e.g. maim1 or im:k=2,A=0.1");
  solve->add_option("--n", n_override, "1D cell-count override");
  solve->add_option("--out-field", out_field, "write the final field as CSV");
  solve->add_option("--out-report", out_report, "write run metrics as key=value lines");

  CLI::App* converge = app.add_subcommand("converge", "error-vs-resolution study");
  converge->add_option("--config", config_path, "run configuration file")->required();
  converge->add_option("--scheme", scheme_spec, "scheme override");
  converge->add_option("--grids", grids_csv, "comma-separated cell counts");
  converge->add_option("--out-report", out_report, "write the study as CSV");

  std::string dump_scheme = "js", dump_out;
  int dump_points = 1000;
  CLI::App* mapdump = app.add_subcommand("map-dump", "sample the weight maps g_s(omega)");
  mapdump->add_option("--scheme", dump_scheme, "scheme spec to sample");
  mapdump->add_option("--points", dump_points, "uniform samples in (0,1)");
  mapdump->add_option("--out", dump_out, "output CSV path")->required();

  std::string which, table_out;
  CLI::App* tables = app.add_subcommand("tables", "regenerate diagnostic tables");
  tables->add_option("--which", which, "appendixA or table1")->required();
  tables->add_option("--out", table_out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      mapweno::RunConfig cfg = mapweno::parse_config_file(config_path);
      if (!scheme_spec.empty()) cfg.scheme = mapweno::parse_scheme_spec(scheme_spec);
      if (n_override > 0) cfg.n = n_override;
      if (!out_field.empty()) cfg.out_field = out_field;
      if (!out_report.empty()) cfg.out_report = out_report;
      const mapweno::RunReport rep = mapweno::run_solve(cfg);
      print_report(rep);
      if (rep.blow_up) return 2;
    } else if (converge->parsed()) {
      mapweno::RunConfig cfg = mapweno::parse_config_file(config_path);
      if (!scheme_spec.empty()) cfg.scheme = mapweno::parse_scheme_spec(scheme_spec);
      if (!grids_csv.empty()) cfg.grids = parse_grid_list(grids_csv);
      if (!out_report.empty()) cfg.out_report = out_report;
      const std::vector<mapweno::ConvergeRow> rows = mapweno::run_converge(cfg);
      std::printf("%8s %14s %7s %14s %7s %14s %7s\n", "n", "L1", "ord", "L2", "ord", "Linf",
                  "ord");
      for (const mapweno::ConvergeRow& r : rows)
        std::printf("%8d %14.6e %7.3f %14.6e %7.3f %14.6e %7.3f\n", r.n, r.err.l1, r.order.l1,
                    r.err.l2, r.order.l2, r.err.linf, r.order.linf);
    } else if (mapdump->parsed()) {
      mapweno::write_map_dump(mapweno::parse_scheme_spec(dump_scheme), dump_points, dump_out);
    } else {
      mapweno::write_table(which, table_out);
    }
  } catch (const mapweno::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
