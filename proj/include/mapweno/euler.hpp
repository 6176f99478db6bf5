//! \file euler.hpp
//! \brief compressible Euler fluxes, Roe-averaged eigenbases, characteristic projection
//!
//! Conservative orderings: 1D (rho, rho*u, E); 2D (rho, rho*u, rho*v, E).
//! The 2D y-direction is handled by permuting the momentum pair and reusing the
//! x-direction machinery, so only the x eigenbasis is spelled out.

#pragma once

#include <array>

#include "mapweno/reconstruction.hpp"

namespace mapweno {

inline constexpr double kGamma = 1.4;

using State3 = std::array<double, 3>;
using State4 = std::array<double, 4>;

double pressure(const State3& u);
double pressure(const State4& u);
double sound_speed(const State3& u);
double sound_speed(const State4& u);

State3 prim_to_cons(double rho, double u, double p);
State4 prim_to_cons(double rho, double u, double v, double p);

//! Physical flux; throws std::domain_error on nonpositive density.
State3 physical_flux(const State3& u);
//! x-direction flux of the 2D system.
State4 physical_flux_x(const State4& u);

template <std::size_t N>
std::array<double, N> lax_friedrichs(const std::array<double, N>& fa,
                                     const std::array<double, N>& fb,
                                     const std::array<double, N>& a,
                                     const std::array<double, N>& b, double alpha) {
  std::array<double, N> out;
  for (std::size_t c = 0; c < N; ++c) out[c] = 0.5 * (fa[c] + fb[c] - alpha * (b[c] - a[c]));
  return out;
}

//! Left/right eigenvector pair of the interface Jacobian. fallback marks interfaces
//! where the Roe average was degenerate and arithmetic-mean primitives were used.
struct EigenBasis3 {
  double L[3][3];
  double R[3][3];
  bool fallback = false;
};

struct EigenBasis4 {
  double L[4][4];
  double R[4][4];
  bool fallback = false;
};

//! Roe-averaged basis; throws std::domain_error when even the fallback state
//! has no real sound speed.
EigenBasis3 eigen_basis(const State3& ul, const State3& ur);
EigenBasis4 eigen_basis_x(const State4& ul, const State4& ur);

//! Characteristic-wise interface flux with global Lax-Friedrichs splitting:
//! project states and fluxes of the 6-cell window onto the basis, reconstruct
//! the upwind half-flux from each side, then transform the sum back. win and
//! fw hold cells j-2..j+3 and their physical fluxes for the face at j+1/2.
State3 characteristic_lf_flux(const std::array<State3, 6>& win, const std::array<State3, 6>& fw,
                              const EigenBasis3& eb, double alpha, const Scheme& s);
State4 characteristic_lf_flux(const std::array<State4, 6>& win, const std::array<State4, 6>& fw,
                              const EigenBasis4& eb, double alpha, const Scheme& s);

}  // namespace mapweno
