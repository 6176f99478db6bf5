//! \file test_grid.cpp
//! \brief Grid geometry, field indexing, and ghost-cell fills for every boundary kind.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "mapweno/grid.hpp"

using namespace mapweno;

namespace {

CellField ramp_field(int n, int m) {
  CellField u({0.0, 1.0, n}, m);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) u(i, c) = 10.0 * (i + 1) + c;
  return u;
}

}  // namespace

TEST_CASE("grid geometry helpers") {
  const Grid1D g{-1.0, 1.0, 8};
  CHECK(g.dx() == doctest::Approx(0.25));
  CHECK(g.face(0) == doctest::Approx(-1.0));
  CHECK(g.face(8) == doctest::Approx(1.0));
  CHECK(g.center(0) == doctest::Approx(-0.875));
  CHECK(g.length() == doctest::Approx(2.0));

  Grid2D g2;
  g2.x0 = 0.0;
  g2.x1 = 3.0;
  g2.y0 = 0.0;
  g2.y1 = 1.0;
  g2.nx = 3;
  g2.ny = 2;
  CHECK(g2.dx() == doctest::Approx(1.0));
  CHECK(g2.dy() == doctest::Approx(0.5));
  CHECK(g2.xc(1) == doctest::Approx(1.5));
  CHECK(g2.yc(0) == doctest::Approx(0.25));
  CHECK_FALSE(g2.is_blank(0, 0));
  g2.blank = BlankRect{1, 3, 0, 1};
  CHECK(g2.is_blank(1, 0));
  CHECK(g2.is_blank(2, 0));
  CHECK_FALSE(g2.is_blank(1, 1));
  CHECK_FALSE(g2.is_blank(0, 0));
}

TEST_CASE("field storage round-trips through the ghost offset") {
  CellField u({0.0, 1.0, 4}, 3);
  u(-kGhost, 0) = 1.5;
  u(3 + kGhost, 2) = -2.5;
  CHECK(u.raw().front() == 1.5);
  CHECK(u.raw().back() == -2.5);
  CHECK(u.n() == 4);
  CHECK(u.components() == 3);

  Grid2D g2;
  g2.nx = 2;
  g2.ny = 2;
  CellField2D v(g2, 2);
  v(-kGhost, -kGhost, 0) = 7.0;
  v(1 + kGhost, 1 + kGhost, 1) = 9.0;
  CHECK(v.raw().front() == 7.0);
  CHECK(v.raw().back() == 9.0);
}

TEST_CASE("periodic fill wraps both sides") {
  CellField u = ramp_field(5, 1);
  fill_ghosts(u, {BcKind::periodic}, {BcKind::periodic}, 0.0);
  CHECK(u(-1, 0) == 50.0);
  CHECK(u(-2, 0) == 40.0);
  CHECK(u(-3, 0) == 30.0);
  CHECK(u(5, 0) == 10.0);
  CHECK(u(6, 0) == 20.0);
  CHECK(u(7, 0) == 30.0);
}

TEST_CASE("mismatched periodic pairing throws") {
  CellField u = ramp_field(5, 1);
  CHECK_THROWS_AS(fill_ghosts(u, {BcKind::periodic}, {BcKind::outflow}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("outflow fill copies the edge cell") {
  CellField u = ramp_field(4, 2);
  fill_ghosts(u, {BcKind::outflow}, {BcKind::outflow}, 0.0);
  for (int g = 1; g <= kGhost; ++g) {
    CHECK(u(-g, 0) == 10.0);
    CHECK(u(-g, 1) == 11.0);
    CHECK(u(3 + g, 0) == 40.0);
    CHECK(u(3 + g, 1) == 41.0);
  }
}

TEST_CASE("reflective fill mirrors and negates the normal momentum") {
  CellField u = ramp_field(4, 3);
  fill_ghosts(u, {BcKind::reflective}, {BcKind::reflective}, 0.0, 1);
  // ghost -1 mirrors interior 0, ghost -2 mirrors interior 1, ...
  CHECK(u(-1, 0) == 10.0);
  CHECK(u(-1, 1) == -11.0);
  CHECK(u(-1, 2) == 12.0);
  CHECK(u(-3, 0) == 30.0);
  CHECK(u(4, 0) == 40.0);
  CHECK(u(4, 1) == -41.0);
  CHECK(u(6, 1) == -21.0);
}

TEST_CASE("inflow fill writes the prescribed state") {
  CellField u = ramp_field(4, 3);
  SideBC lo{BcKind::inflow, {1.0, 2.0, 3.0, 0.0}, nullptr};
  fill_ghosts(u, lo, {BcKind::outflow}, 0.0);
  for (int g = 1; g <= kGhost; ++g) {
    CHECK(u(-g, 0) == 1.0);
    CHECK(u(-g, 1) == 2.0);
    CHECK(u(-g, 2) == 3.0);
  }
  CHECK(u(4, 0) == 40.0);
}

TEST_CASE("custom fill receives the reflected mirror state and the lane coordinate") {
  CellField u = ramp_field(4, 2);
  SideBC hi;
  hi.kind = BcKind::custom;
  double seen_coord = -1.0, seen_t = -1.0;
  hi.custom = [&](double coord, double t, const double* mirror, double* ghost, int m) {
    seen_coord = coord;
    seen_t = t;
    for (int c = 0; c < m; ++c) ghost[c] = 2.0 * mirror[c];
  };
  fill_ghosts(u, {BcKind::outflow}, hi, 2.5, 1);
  CHECK(seen_coord == 0.0);
  CHECK(seen_t == 2.5);
  // ghost n mirrors interior n-1 with component 1 negated, then doubled
  CHECK(u(4, 0) == 80.0);
  CHECK(u(4, 1) == -82.0);
  CHECK(u(6, 0) == 40.0);
}

TEST_CASE("lane fill matches the field fill on the same data") {
  CellField a = ramp_field(6, 2);
  CellField b = a;
  fill_ghosts(a, {BcKind::periodic}, {BcKind::periodic}, 0.0);
  fill_lane_ghosts(b.raw().data(), 6, 2, {BcKind::periodic}, {BcKind::periodic}, 0.0, 0.75, -1);
  CHECK(a.raw() == b.raw());
}
