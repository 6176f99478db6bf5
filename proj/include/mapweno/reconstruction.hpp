//! \file reconstruction.hpp
//! \brief fifth-order WENO interface reconstruction from cell averages

#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "mapweno/mapping.hpp"

namespace mapweno {

inline constexpr std::array<double, 3> kOptimalWeights{0.1, 0.6, 0.3};
inline constexpr double kWenoEps = 1e-40;

//! A reconstruction scheme: mapping kind plus its parameters.
struct Scheme {
  MappingKind kind = MappingKind::js;
  MaimParams params{};
};

//! Scheme with published default parameters for the given name (js, m, im, maim1..maim5).
Scheme make_scheme(std::string_view name);

//! Third-order candidate values at the right face x_{j+1/2}; u = averages of cells j-2..j+2.
inline std::array<double, 3> candidate_values(const std::array<double, 5>& u) {
  return {
      (2.0 * u[0] - 7.0 * u[1] + 11.0 * u[2]) / 6.0,
      (-u[1] + 5.0 * u[2] + 2.0 * u[3]) / 6.0,
      (2.0 * u[2] + 5.0 * u[3] - u[4]) / 6.0,
  };
}

inline std::array<double, 3> smoothness_indicators(const std::array<double, 5>& u) {
  constexpr double c = 13.0 / 12.0;
  const double b0 = c * (u[0] - 2.0 * u[1] + u[2]) * (u[0] - 2.0 * u[1] + u[2]) +
                    0.25 * (u[0] - 4.0 * u[1] + 3.0 * u[2]) * (u[0] - 4.0 * u[1] + 3.0 * u[2]);
  const double b1 = c * (u[1] - 2.0 * u[2] + u[3]) * (u[1] - 2.0 * u[2] + u[3]) +
                    0.25 * (u[1] - u[3]) * (u[1] - u[3]);
  const double b2 = c * (u[2] - 2.0 * u[3] + u[4]) * (u[2] - 2.0 * u[3] + u[4]) +
                    0.25 * (3.0 * u[2] - 4.0 * u[3] + u[4]) * (3.0 * u[2] - 4.0 * u[3] + u[4]);
  return {b0, b1, b2};
}

//! Nonlinear weights; summation order is fixed for bitwise reproducibility.
inline std::array<double, 3> js_weights(const std::array<double, 3>& beta, double eps = kWenoEps) {
  const double a0 = kOptimalWeights[0] / ((eps + beta[0]) * (eps + beta[0]));
  const double a1 = kOptimalWeights[1] / ((eps + beta[1]) * (eps + beta[1]));
  const double a2 = kOptimalWeights[2] / ((eps + beta[2]) * (eps + beta[2]));
  const double inv = 1.0 / (a0 + a1 + a2);
  return {a0 * inv, a1 * inv, a2 * inv};
}

//! One-sided reconstruction at x_{j+1/2} from cell averages of j-2..j+2.
inline double reconstruct_interface(const std::array<double, 5>& win, const Scheme& s) {
  const std::array<double, 3> q = candidate_values(win);
  const std::array<double, 3> beta = smoothness_indicators(win);
  std::array<double, 3> w = js_weights(beta);
  if (s.kind != MappingKind::js) {
    const MappingContext ctx{beta, w};
    w = apply_mapping(s.kind, s.params, ctx, w, kOptimalWeights);
  }
  return w[0] * q[0] + w[1] * q[1] + w[2] * q[2];
}

//! Both interface states at x_{j+1/2}; win = averages of cells j-2..j+3.
//! The right-biased state reuses the left-biased formulas on the mirrored window.
inline std::pair<double, double> reconstruct_pair(const std::array<double, 6>& win,
                                                  const Scheme& s) {
  const double um = reconstruct_interface({win[0], win[1], win[2], win[3], win[4]}, s);
  const double up = reconstruct_interface({win[5], win[4], win[3], win[2], win[1]}, s);
  return {um, up};
}

}  // namespace mapweno
