//! \file quadrature.hpp
//! \brief cell-average initialization via piecewise 5-point Gauss-Legendre quadrature

#pragma once

#include <functional>
#include <vector>

#include "mapweno/grid.hpp"

namespace mapweno {

// nodes and weights on [-1, 1]; exact through polynomial degree 9
inline constexpr std::array<double, 5> kGl5Nodes{
    -0.90617984593866399280, -0.53846931010568309104, 0.0,
    0.53846931010568309104, 0.90617984593866399280};
inline constexpr std::array<double, 5> kGl5Weights{
    0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
    0.47862867049936646804, 0.23692688505618908751};

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<void(double x, double* out)>;

double integrate_segment(const ScalarFn& f, double a, double b);

//! Integral over [a, b], split at every interior breakpoint so each Gauss panel
//! sees a single smooth piece.
double integrate_piecewise(const ScalarFn& f, double a, double b,
                           const std::vector<double>& breakpoints);

//! Fills the interior of u with exact-to-quadrature cell averages of f.
void cell_average_init(CellField& u, const VectorFn& f,
                       const std::vector<double>& breakpoints = {});

//! Tensor-product variant; breakpoints split the x and y integrals independently.
void cell_average_init(CellField2D& u, const std::function<void(double, double, double*)>& f,
                       const std::vector<double>& x_breaks = {},
                       const std::vector<double>& y_breaks = {});

}  // namespace mapweno
