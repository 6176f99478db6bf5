//! \file config.hpp
//! \brief Flat INI-style run configuration parsing.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapweno/reconstruction.hpp"

namespace mapweno {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed run configuration. Zero/negative sentinels defer to the problem's
// defaults; the run mode itself comes from the CLI subcommand.
struct RunConfig {
  std::string problem;
  Scheme scheme = make_scheme("js");
  int n = 0;            // 1D cell count, 0 = problem default
  int nx = 0, ny = 0;   // 2D cell counts, 0 = problem default
  double t_final = -1.0;  // negative = problem default
  double cfl = 0.0;     // 0 = problem default, negative = accuracy-scaled
  std::string out_field;
  std::string out_report;
  std::vector<int> grids;  // converge-mode cell counts, strictly increasing
};

// Accepted keys: problem, scheme, scheme.{k,A,ms,Q,cfs,C}, grid.{n,nx,ny},
// t_final, cfl, out.{field,report}, grids. A [section] header prefixes the
// keys that follow ("[scheme] \n k = 2" equals "scheme.k = 2"). Lines are
// key = value; '#' and ';' start comments. Unknown keys are errors.
RunConfig parse_config_text(std::string_view text);
RunConfig parse_config_file(const std::string& path);

// Scheme spec strings: "js", "m", "im", "maim1".."maim5", optionally with
// parameters, e.g. "im:k=2,A=0.1" or "maim5:k=2,A=1,C=1".
Scheme parse_scheme_spec(std::string_view spec);

}  // namespace mapweno

