//! \file analysis.hpp
//! \brief Error norms, convergence orders, order predictors, and weight-map diagnostics.

#pragma once

#include <vector>

#include "mapweno/grid.hpp"

namespace mapweno {

struct Norms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

// Discrete norms of (a - b) in component comp: L1 = dx*sum|e|,
// L2 = sqrt(dx*sum e^2), Linf = max|e|. Grids must agree.
Norms error_norms(const CellField& a, const CellField& b, double dx, int comp = 0);

// log2(e_coarse / e_fine) for a grid refinement by 2.
double empirical_order(double e_coarse, double e_fine);

// ----- convergence-order predictors for a (2r-1)-order scheme at a
// critical point of order ncp (ncp = 0 means smooth, no critical point).

// Unmapped nonlinear weights.
int predict_order_js(int r, int ncp);

// n-fold composite of the algebraic map; n = 1 is the classic single map.
int predict_order_m(int r, int ncp, int n = 1);

// Any mapping with a sufficiently wide flat segment about d_s.
int predict_order_mapped(int r, int ncp);

// Minimal k restoring order 2r-1; -1 when no finite k qualifies (ncp >= r-1).
int k_im_min(int r, int ncp);
int k_maim_min(int r, int ncp);

// Optimal linear weights d_s, s = 0..r-1, for stencil sizes r = 1..9.
std::vector<double> optimal_weights(int r);

// ----- flat-segment width diagnostics.
// q_s(w) is the scaled gap between the algebraic map and the identity near
// d_s; its interior maximum bounds how aggressively a flat segment may be
// widened while preserving monotonicity.
double q_s(double w, double d);
double q_s_prime(double w, double d);

struct QAnalysis {
  double omega_crit = 0.0;  // interior argmax of q_s, 0 when none exists
  double q_max = 0.0;       // q_s at the argmax (negative when no interior max)
  double alpha = 0.0;       // q_max rounded up at the 4th decimal, floored at 1e-4
};

// Dense scan plus bisection on q_s' to 1e-12 in omega.
QAnalysis analyze_q(double d);

// ----- solution-quality metrics.

struct Overshoot {
  double over = 0.0;   // max(0, max u - umax)
  double under = 0.0;  // max(0, umin - min u)
};
Overshoot oscillation_metrics(const CellField& u, double umin, double umax, int comp = 0);

// dx * sum of cell averages (the conserved total of component comp).
double total_mass(const CellField& u, double dx, int comp = 0);

struct Range {
  double lo = 0.0, hi = 0.0;
};
// Min/max of component comp over non-blank cells.
Range field_range(const CellField2D& u, const Grid2D& g, int comp = 0);

}  // namespace mapweno

