//! \file quadrature.cpp
//! \brief piecewise Gauss-Legendre integration and cell-average initialization

#include "mapweno/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace mapweno {

double integrate_segment(const ScalarFn& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double acc = 0.0;
  for (int q = 0; q < 5; ++q) acc += kGl5Weights[q] * f(c + h * kGl5Nodes[q]);
  return acc * h;
}

double integrate_piecewise(const ScalarFn& f, double a, double b,
                           const std::vector<double>& breakpoints) {
  std::vector<double> cuts;
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  double lo = a;
  for (double p : cuts) {
    acc += integrate_segment(f, lo, p);
    lo = p;
  }
  return acc + integrate_segment(f, lo, b);
}

void cell_average_init(CellField& u, const VectorFn& f,
                       const std::vector<double>& breakpoints) {
  const Grid1D& g = u.grid();
  const int m = u.components();
  std::vector<double> tmp(m);
  for (int c = 0; c < m; ++c) {
    ScalarFn fc = [&](double x) {
      f(x, tmp.data());
      return tmp[c];
    };
    // normalize by the realized face gap, not the nominal dx: the two differ
    // by ~i ulps and the quotient must stay exact for constant integrands
    for (int i = 0; i < g.n; ++i) {
      const double a = g.face(i), b = g.face(i + 1);
      u(i, c) = integrate_piecewise(fc, a, b, breakpoints) / (b - a);
    }
  }
}

void cell_average_init(CellField2D& u, const std::function<void(double, double, double*)>& f,
                       const std::vector<double>& x_breaks,
                       const std::vector<double>& y_breaks) {
  const Grid2D& g = u.grid();
  const int m = u.components();
  std::vector<double> tmp(m);
  for (int c = 0; c < m; ++c) {
    for (int j = 0; j < g.ny; ++j) {
      const double ya = g.y0 + j * g.dy();
      const double yb = g.y0 + (j + 1) * g.dy();
      ScalarFn row = [&](double x) {
        ScalarFn col = [&](double y) {
          f(x, y, tmp.data());
          return tmp[c];
        };
        return integrate_piecewise(col, ya, yb, y_breaks);
      };
      for (int i = 0; i < g.nx; ++i) {
        const double xa = g.x0 + i * g.dx();
        const double xb = g.x0 + (i + 1) * g.dx();
        u(i, j, c) = integrate_piecewise(row, xa, xb, x_breaks) / ((xb - xa) * (yb - ya));
      }
    }
  }
}

}  // namespace mapweno
