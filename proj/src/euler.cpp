//! \file euler.cpp
//! \brief gas-dynamics fluxes and Roe-averaged characteristic decompositions

#include "mapweno/euler.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mapweno {

namespace {

constexpr double kGm1 = kGamma - 1.0;

// Roe-averaged (u, H, c^2) of an interface; falls back to arithmetic-mean
// primitives when the averaged sound speed is not real.
struct RoeAvg {
  double u = 0.0, v = 0.0, H = 0.0, c2 = 0.0;
  bool fallback = false;
};

// experiment switch: arithmetic-mean primitives for the basis state instead of
// Roe weights (MAPWENO_BASIS=mean)
bool use_mean_basis() {
  static const bool v = [] {
    const char* e = std::getenv("MAPWENO_BASIS");
    return e && std::string(e) == std::string("mean");
  }();
  return v;
}

RoeAvg roe_average(double rl, double pl, double ul, double vl, double Hl,
                   double rr, double pr, double ur, double vr, double Hr) {
  RoeAvg a;
  if (use_mean_basis()) {
    const double rm = 0.5 * (rl + rr);
    const double pm = 0.5 * (pl + pr);
    a.u = 0.5 * (ul + ur);
    a.v = 0.5 * (vl + vr);
    a.c2 = kGamma * pm / rm;
    a.H = a.c2 / kGm1 + 0.5 * (a.u * a.u + a.v * a.v);
    if (!(a.c2 > 0.0)) throw std::domain_error("interface state has no real sound speed");
    return a;
  }
  const double sl = std::sqrt(rl);
  const double sr = std::sqrt(rr);
  const double inv = 1.0 / (sl + sr);
  a.u = (sl * ul + sr * ur) * inv;
  a.v = (sl * vl + sr * vr) * inv;
  a.H = (sl * Hl + sr * Hr) * inv;
  a.c2 = kGm1 * (a.H - 0.5 * (a.u * a.u + a.v * a.v));
  if (!(a.c2 > 0.0)) {
    a.fallback = true;
    const double rm = 0.5 * (rl + rr);
    const double pm = 0.5 * (pl + pr);
    a.u = 0.5 * (ul + ur);
    a.v = 0.5 * (vl + vr);
    a.c2 = kGamma * pm / rm;
    a.H = a.c2 / kGm1 + 0.5 * (a.u * a.u + a.v * a.v);
    if (!(a.c2 > 0.0)) throw std::domain_error("interface state has no real sound speed");
  }
  return a;
}

}  // namespace

double pressure(const State3& u) { return kGm1 * (u[2] - 0.5 * u[1] * u[1] / u[0]); }

double pressure(const State4& u) {
  return kGm1 * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
}

double sound_speed(const State3& u) { return std::sqrt(kGamma * pressure(u) / u[0]); }

double sound_speed(const State4& u) { return std::sqrt(kGamma * pressure(u) / u[0]); }

State3 prim_to_cons(double rho, double u, double p) {
  return {rho, rho * u, p / kGm1 + 0.5 * rho * u * u};
}

State4 prim_to_cons(double rho, double u, double v, double p) {
  return {rho, rho * u, rho * v, p / kGm1 + 0.5 * rho * (u * u + v * v)};
}

State3 physical_flux(const State3& u) {
  if (!(u[0] > 0.0)) throw std::domain_error("nonpositive density");
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  return {u[1], u[1] * vel + p, vel * (u[2] + p)};
}

State4 physical_flux_x(const State4& u) {
  if (!(u[0] > 0.0)) throw std::domain_error("nonpositive density");
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  return {u[1], u[1] * vel + p, u[2] * vel, vel * (u[3] + p)};
}

EigenBasis3 eigen_basis(const State3& ul, const State3& ur) {
  if (!(ul[0] > 0.0) || !(ur[0] > 0.0)) throw std::domain_error("nonpositive density");
  const double pl = pressure(ul);
  const double pr = pressure(ur);
  const RoeAvg a = roe_average(ul[0], pl, ul[1] / ul[0], 0.0, (ul[2] + pl) / ul[0],
                               ur[0], pr, ur[1] / ur[0], 0.0, (ur[2] + pr) / ur[0]);
  const double c = std::sqrt(a.c2);
  const double u = a.u;
  const double b2 = kGm1 / a.c2;
  const double b1 = 0.5 * b2 * u * u;

  EigenBasis3 eb;
  eb.fallback = a.fallback;
  const double R[3][3] = {{1.0, 1.0, 1.0},
                          {u - c, u, u + c},
                          {a.H - u * c, 0.5 * u * u, a.H + u * c}};
  const double L[3][3] = {
      {0.5 * (b1 + u / c), -0.5 * (b2 * u + 1.0 / c), 0.5 * b2},
      {1.0 - b1, b2 * u, -b2},
      {0.5 * (b1 - u / c), -0.5 * (b2 * u - 1.0 / c), 0.5 * b2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      eb.R[i][j] = R[i][j];
      eb.L[i][j] = L[i][j];
    }
  return eb;
}

EigenBasis4 eigen_basis_x(const State4& ul, const State4& ur) {
  if (!(ul[0] > 0.0) || !(ur[0] > 0.0)) throw std::domain_error("nonpositive density");
  const double pl = pressure(ul);
  const double pr = pressure(ur);
  const RoeAvg a =
      roe_average(ul[0], pl, ul[1] / ul[0], ul[2] / ul[0], (ul[3] + pl) / ul[0],
                  ur[0], pr, ur[1] / ur[0], ur[2] / ur[0], (ur[3] + pr) / ur[0]);
  const double c = std::sqrt(a.c2);
  const double u = a.u;
  const double v = a.v;
  const double b2 = kGm1 / a.c2;
  const double b1 = 0.5 * b2 * (u * u + v * v);

  EigenBasis4 eb;
  eb.fallback = a.fallback;
  const double R[4][4] = {{1.0, 1.0, 0.0, 1.0},
                          {u - c, u, 0.0, u + c},
                          {v, v, 1.0, v},
                          {a.H - u * c, 0.5 * (u * u + v * v), v, a.H + u * c}};
  const double L[4][4] = {
      {0.5 * (b1 + u / c), -0.5 * (b2 * u + 1.0 / c), -0.5 * b2 * v, 0.5 * b2},
      {1.0 - b1, b2 * u, b2 * v, -b2},
      {-v, 0.0, 1.0, 0.0},
      {0.5 * (b1 - u / c), -0.5 * (b2 * u - 1.0 / c), -0.5 * b2 * v, 0.5 * b2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      eb.R[i][j] = R[i][j];
      eb.L[i][j] = L[i][j];
    }
  return eb;
}

namespace {

// Shared splitting core: project the window, reconstruct the right-going half
// from the left-biased stencil and the left-going half from the mirrored one.
template <std::size_t N>
std::array<double, N> split_flux_impl(const std::array<std::array<double, N>, 6>& win,
                                      const std::array<std::array<double, N>, 6>& fw,
                                      const double (&L)[N][N], const double (&R)[N][N],
                                      double alpha, const Scheme& s) {
  double hp[6][N], hm[6][N];
  for (int i = 0; i < 6; ++i)
    for (std::size_t c = 0; c < N; ++c) {
      double w = 0.0, h = 0.0;
      for (std::size_t j = 0; j < N; ++j) {
        w += L[c][j] * win[i][j];
        h += L[c][j] * fw[i][j];
      }
      hp[i][c] = 0.5 * (h + alpha * w);
      hm[i][c] = 0.5 * (h - alpha * w);
    }
  double hs[N];
  for (std::size_t c = 0; c < N; ++c) {
    const double plus =
        reconstruct_interface({hp[0][c], hp[1][c], hp[2][c], hp[3][c], hp[4][c]}, s);
    const double minus =
        reconstruct_interface({hm[5][c], hm[4][c], hm[3][c], hm[2][c], hm[1][c]}, s);
    hs[c] = plus + minus;
  }
  std::array<double, N> out;
  for (std::size_t j = 0; j < N; ++j) {
    double acc = 0.0;
    for (std::size_t c = 0; c < N; ++c) acc += R[j][c] * hs[c];
    out[j] = acc;
  }
  return out;
}

}  // namespace

State3 characteristic_lf_flux(const std::array<State3, 6>& win, const std::array<State3, 6>& fw,
                              const EigenBasis3& eb, double alpha, const Scheme& s) {
  return split_flux_impl<3>(win, fw, eb.L, eb.R, alpha, s);
}

State4 characteristic_lf_flux(const std::array<State4, 6>& win, const std::array<State4, 6>& fw,
                              const EigenBasis4& eb, double alpha, const Scheme& s) {
  return split_flux_impl<4>(win, fw, eb.L, eb.R, alpha, s);
}

}  // namespace mapweno
