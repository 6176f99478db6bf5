//! \file runner.hpp
//! \brief Run orchestration: solve/converge drivers, table and curve emitters,
//!        and the binary reference-solution cache.

#pragma once

#include <string>
#include <vector>

#include "mapweno/analysis.hpp"
#include "mapweno/config.hpp"
#include "mapweno/problems.hpp"

namespace mapweno {

struct RunReport {
  bool blow_up = false;
  double blow_up_time = 0.0;  // t at which positivity/finiteness failed
  double t_reached = 0.0;
  long n_steps = 0;
  long eigen_fallbacks = 0;
  double min_rho = 0.0, min_p = 0.0;  // over all accepted steps (Euler only)
  double mass_drift = 0.0;            // |m(T)-m(0)| / max(1,|m(0)|), component 0
  bool has_norms = false;
  Norms norms;  // against exact advection profile or cached reference
  bool has_osc = false;
  Overshoot osc;
  bool has_range = false;
  Range rho_range;  // final-field density extrema (2D Euler)
  double wall_seconds = 0.0;  // never written to artifacts
};

// One full run. Writes out_field / out_report when set in the config.
// Reports never throw on blow-up; the flag and time are recorded instead.
RunReport run_solve(const RunConfig& cfg);

struct ConvergeRow {
  int n = 0;
  Norms err;
  Norms order;  // vs previous row; zeros in the first row
};

// Error-vs-resolution study on cfg.grids (advection problems only; the
// exact shifted profile is the comparison). Writes CSV when out_report set.
std::vector<ConvergeRow> run_converge(const RunConfig& cfg);

// Samples all three per-stencil map curves g_s(w), s = 0,1,2, on a uniform
// w-grid of `points` samples in (0,1). Context-dependent maps see a frozen
// smooth context (unit smoothness indicators, w_js = d). CSV columns:
// omega,g0,g1,g2.
void write_map_dump(const Scheme& scheme, int points, const std::string& path);

// Regenerated diagnostics tables as CSV.
//   which = "appendixA": per (r,s) flat-segment analysis, columns
//     r,s,d,omega_crit,q_max,alpha,agrees_ref (0/1 against the built-in
//     reference tabulation).
//   which = "table1": predicted convergence orders, columns
//     r,ncp,js,m1,m2,im,k_im_min,maim,k_maim_min (-1 = no finite k).
void write_table(const std::string& which, const std::string& path);

struct PublishedQRow {
  int r = 0, s = 0;
  double omega_crit = 0.0, q_max = 0.0, alpha = 0.0;
};
// Reference tabulation used to cross-check regenerated flat-segment rows.
const std::vector<PublishedQRow>& tabulated_q_reference();

// WENO-JS reference run at resolution n, cached as a binary field dump under
// $MAPWENO_CACHE_DIR (default "ref_cache"). Corrupt or mismatched cache
// entries are regenerated. 1D Euler problems only.
CellField load_or_generate_reference(const Problem& p, int n = 10000);

// %.17g formatting used for every floating-point artifact value.
std::string format_g17(double v);

}  // namespace mapweno

