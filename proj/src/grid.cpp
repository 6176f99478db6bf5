//! \file grid.cpp
//! \brief ghost-cell fills for 1D fields and raw sweep lanes

#include "mapweno/grid.hpp"

#include <stdexcept>

namespace mapweno {

namespace {

constexpr int kMaxComp = 8;

// Reflected interior state feeding reflective and custom fills.
inline void mirror_state(const double* src, double* dst, int m, int reflect_comp) {
  for (int c = 0; c < m; ++c) dst[c] = src[c];
  if (reflect_comp >= 0) dst[reflect_comp] = -dst[reflect_comp];
}

}  // namespace

void fill_lane_ghosts(double* lane, int n, int m, const SideBC& lo, const SideBC& hi, double t,
                      double coord, int reflect_comp) {
  if ((lo.kind == BcKind::periodic) != (hi.kind == BcKind::periodic))
    throw std::invalid_argument("periodic boundary must pair with periodic");
  auto cell = [&](int i) { return lane + (i + kGhost) * m; };
  double tmp[kMaxComp];

  for (int g = 0; g < kGhost; ++g) {
    double* ghost = cell(-1 - g);
    switch (lo.kind) {
      case BcKind::periodic:
        for (int c = 0; c < m; ++c) ghost[c] = cell(n - 1 - g)[c];
        break;
      case BcKind::outflow:
        for (int c = 0; c < m; ++c) ghost[c] = cell(0)[c];
        break;
      case BcKind::reflective:
        mirror_state(cell(g), ghost, m, reflect_comp);
        break;
      case BcKind::inflow:
        for (int c = 0; c < m; ++c) ghost[c] = lo.inflow[c];
        break;
      case BcKind::custom:
        mirror_state(cell(g), tmp, m, reflect_comp);
        lo.custom(coord, t, tmp, ghost, m);
        break;
    }
  }

  for (int g = 0; g < kGhost; ++g) {
    double* ghost = cell(n + g);
    switch (hi.kind) {
      case BcKind::periodic:
        for (int c = 0; c < m; ++c) ghost[c] = cell(g)[c];
        break;
      case BcKind::outflow:
        for (int c = 0; c < m; ++c) ghost[c] = cell(n - 1)[c];
        break;
      case BcKind::reflective:
        mirror_state(cell(n - 1 - g), ghost, m, reflect_comp);
        break;
      case BcKind::inflow:
        for (int c = 0; c < m; ++c) ghost[c] = hi.inflow[c];
        break;
      case BcKind::custom:
        mirror_state(cell(n - 1 - g), tmp, m, reflect_comp);
        hi.custom(coord, t, tmp, ghost, m);
        break;
    }
  }
}

void fill_ghosts(CellField& u, const SideBC& lo, const SideBC& hi, double t, int reflect_comp) {
  fill_lane_ghosts(u.raw().data(), u.n(), u.components(), lo, hi, t, 0.0, reflect_comp);
}

}  // namespace mapweno
