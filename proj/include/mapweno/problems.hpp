//! \file problems.hpp
//! \brief Catalog of benchmark problems: grids, initial data, boundaries, run defaults.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapweno/grid.hpp"
#include "mapweno/time_integration.hpp"

namespace mapweno {

// A fully specified benchmark case. 1D problems populate grid/ic/breaks,
// 2D problems populate grid2/ic2 (pointwise, conservative variables).
// cfl <= 0 means the accuracy-scaled rule dx^(2/3).
struct Problem {
  std::string name;
  SystemKind system = SystemKind::advection;
  double advection_speed = 1.0;

  Grid1D grid{};
  BoundaryCondition bc{};
  double t_final = 0.0;
  double cfl = 0.5;
  int default_n = 0;

  // Pointwise initial data in conservative variables; breaks lists the
  // kink/jump abscissae so quadrature never straddles a non-smooth point.
  std::function<void(double, double*)> ic;
  std::vector<double> breaks;

  // Exact-profile bounds, used by overshoot/undershoot metrics. Valid only
  // when exact_advection applies (scalar advection of the initial profile).
  bool has_exact_advection = false;
  double umin = 0.0, umax = 0.0;

  Grid2D grid2{};
  int default_nx = 0, default_ny = 0;
  std::function<void(double, double, double*)> ic2;
  std::vector<double> x_breaks, y_breaks;
  // Cells cut by the inclined shock get exact two-state area-weighted
  // averages instead of tensor quadrature of the discontinuous data.
  bool oblique_shock_init = false;
  // Excluded rectangle in physical coordinates; mapped to cell indices per
  // resolution (must be cell-aligned, else initialization throws).
  struct PhysRect {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  };
  std::optional<PhysRect> blank_phys;
};

// Stable identifiers: lae-sine, lae-critical, slp, bicwp, step-ic,
// blast, titarev-toro, riemann2d, dmr, ffs. Lookup is case-insensitive.
Problem make_problem(std::string_view name);
std::vector<std::string> problem_names();

// Cell-average initialization on n (or nx-by-ny) cells of the problem's grid.
CellField initial_field(const Problem& p, int n);
CellField2D initial_field_2d(const Problem& p, int nx, int ny);

// Cell averages of the advected initial profile at time t (periodic wrap).
CellField exact_advection(const Problem& p, int n, double t);

}  // namespace mapweno

