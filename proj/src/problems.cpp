//! \file problems.cpp
//! \brief benchmark catalog: initial profiles, boundary setups, run defaults

#include "mapweno/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mapweno/euler.hpp"
#include "mapweno/quadrature.hpp"

namespace mapweno {

namespace {

constexpr double kPi = std::numbers::pi;

double slp_value(double x) {
  constexpr double z = -0.7, dhat = 0.005, a = 0.5, al = 10.0;
  const double beta = std::log(2.0) / (36.0 * dhat * dhat);
  auto G = [&](double c) { return std::exp(-beta * (x - c) * (x - c)); };
  auto F = [&](double c) {
    return std::sqrt(std::max(1.0 - al * al * (x - c) * (x - c), 0.0));
  };
  if (x >= -0.8 && x <= -0.6) return (G(z - dhat) + 4.0 * G(z) + G(z + dhat)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::fabs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) return (F(a - dhat) + 4.0 * F(a) + F(a + dhat)) / 6.0;
  return 0.0;
}

double bicwp_value(double x) {
  if (x <= -0.8) return 0.0;
  if (x <= -0.6) return 1.0;
  if (x <= -0.4) return 0.5;
  if (x <= -0.2) return 1.0;
  if (x <= 0.2) return 0.0;
  if (x <= 0.4) return 0.5;
  if (x <= 0.6) return 1.0;
  if (x <= 0.8) return 0.5;
  return 0.0;
}

Problem scalar_advection(const char* name, std::function<double(double)> f,
                         std::vector<double> breaks, double t_final, double cfl, int default_n,
                         double umin, double umax) {
  Problem p;
  p.name = name;
  p.system = SystemKind::advection;
  p.grid = {-1.0, 1.0, 0};
  p.bc.x_lo.kind = BcKind::periodic;
  p.bc.x_hi.kind = BcKind::periodic;
  p.t_final = t_final;
  p.cfl = cfl;
  p.default_n = default_n;
  p.ic = [f = std::move(f)](double x, double* out) { out[0] = f(x); };
  p.breaks = std::move(breaks);
  p.has_exact_advection = true;
  p.umin = umin;
  p.umax = umax;
  return p;
}

Problem make_lae_sine() {
  return scalar_advection("lae-sine", [](double x) { return std::sin(kPi * x); }, {}, 2.0, 0.0,
                          200, -1.0, 1.0);
}

Problem make_lae_critical() {
  return scalar_advection(
      "lae-critical", [](double x) { return std::sin(kPi * x - std::sin(kPi * x) / kPi); }, {},
      2.0, 0.0, 200, -1.0, 1.0);
}

Problem make_slp() {
  return scalar_advection("slp", slp_value,
                          {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.405, 0.595, 0.6},
                          2000.0, 0.1, 800, 0.0, 1.0);
}

Problem make_bicwp() {
  return scalar_advection("bicwp", bicwp_value, {-0.8, -0.6, -0.4, -0.2, 0.2, 0.4, 0.6, 0.8},
                          2000.0, 0.1, 800, 0.0, 1.0);
}

Problem make_step_ic() {
  return scalar_advection("step-ic", [](double x) { return x < 0.0 ? 1.0 : 0.0; }, {0.0}, 200.0,
                          0.1, 200, 0.0, 1.0);
}

Problem make_blast() {
  Problem p;
  p.name = "blast";
  p.system = SystemKind::euler1d;
  p.grid = {0.0, 1.0, 0};
  p.bc.x_lo.kind = BcKind::reflective;
  p.bc.x_hi.kind = BcKind::reflective;
  p.t_final = 0.038;
  p.cfl = 0.1;
  p.default_n = 400;
  p.ic = [](double x, double* out) {
    const double pr = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
    const State3 s = prim_to_cons(1.0, 0.0, pr);
    std::copy(s.begin(), s.end(), out);
  };
  p.breaks = {0.1, 0.9};
  return p;
}

Problem make_titarev_toro() {
  Problem p;
  p.name = "titarev-toro";
  p.system = SystemKind::euler1d;
  p.grid = {-5.0, 5.0, 0};
  p.bc.x_lo.kind = BcKind::outflow;
  p.bc.x_hi.kind = BcKind::outflow;
  p.t_final = 5.0;
  p.cfl = 0.4;
  p.default_n = 1500;
  p.ic = [](double x, double* out) {
    const State3 s = x < -4.5 ? prim_to_cons(1.515695, 0.5233346, 1.80500)
                              : prim_to_cons(1.0 + 0.1 * std::sin(20.0 * kPi * x), 0.0, 1.0);
    std::copy(s.begin(), s.end(), out);
  };
  p.breaks = {-4.5};
  return p;
}

Problem make_riemann2d() {
  Problem p;
  p.name = "riemann2d";
  p.system = SystemKind::euler2d;
  p.grid2 = {0.0, 1.0, 0.0, 1.0, 0, 0, std::nullopt};
  p.bc.x_lo.kind = BcKind::outflow;
  p.bc.x_hi.kind = BcKind::outflow;
  p.bc.y_lo.kind = BcKind::outflow;
  p.bc.y_hi.kind = BcKind::outflow;
  p.t_final = 0.3;
  p.cfl = 0.5;
  p.default_nx = 1200;
  p.default_ny = 1200;
  p.ic2 = [](double x, double y, double* out) {
    State4 s;
    if (y >= 0.5)
      s = x >= 0.5 ? prim_to_cons(1.0, 0.0, -0.3, 1.0) : prim_to_cons(2.0, 0.0, 0.3, 1.0);
    else
      s = x >= 0.5 ? prim_to_cons(0.5313, 0.0, 0.4276, 0.4)
                   : prim_to_cons(1.0625, 0.0, 0.8145, 0.4);
    std::copy(s.begin(), s.end(), out);
  };
  p.x_breaks = {0.5};
  p.y_breaks = {0.5};
  return p;
}

Problem make_dmr() {
  Problem p;
  p.name = "dmr";
  p.system = SystemKind::euler2d;
  p.grid2 = {0.0, 4.0, 0.0, 1.0, 0, 0, std::nullopt};
  p.t_final = 0.2;
  p.cfl = 0.5;
  p.default_nx = 2000;
  p.default_ny = 500;
  p.oblique_shock_init = true;

  const double x0 = 1.0 / 6.0;
  const double inv_s3 = 1.0 / std::sqrt(3.0);
  const State4 post =
      prim_to_cons(8.0, 8.25 * std::cos(kPi / 6.0), -8.25 * std::sin(kPi / 6.0), 116.5);
  const State4 pre = prim_to_cons(1.4, 0.0, 0.0, 1.0);

  p.ic2 = [=](double x, double y, double* out) {
    const State4& s = x < x0 + y * inv_s3 ? post : pre;
    std::copy(s.begin(), s.end(), out);
  };

  p.bc.x_lo.kind = BcKind::inflow;
  std::copy(post.begin(), post.end(), p.bc.x_lo.inflow.begin());
  p.bc.x_hi.kind = BcKind::outflow;
  // Bottom: post-shock state ahead of the wall segment, reflecting wall after it.
  p.bc.y_lo.kind = BcKind::custom;
  p.bc.y_lo.custom = [=](double x, double, const double* mirror, double* ghost, int m) {
    const double* src = x < x0 ? post.data() : mirror;
    for (int c = 0; c < m; ++c) ghost[c] = src[c];
  };
  // Top: the exact shock foot at the upper boundary moves right with time.
  p.bc.y_hi.kind = BcKind::custom;
  p.bc.y_hi.custom = [=](double x, double t, const double*, double* ghost, int m) {
    const double s_t = x0 + (1.0 + 20.0 * t) * inv_s3;
    const double* src = x < s_t ? post.data() : pre.data();
    for (int c = 0; c < m; ++c) ghost[c] = src[c];
  };
  return p;
}

Problem make_ffs() {
  Problem p;
  p.name = "ffs";
  p.system = SystemKind::euler2d;
  p.grid2 = {0.0, 3.0, 0.0, 1.0, 0, 0, std::nullopt};
  p.t_final = 4.0;
  p.cfl = 0.5;
  p.default_nx = 900;
  p.default_ny = 300;
  p.blank_phys = Problem::PhysRect{0.6, 3.0, 0.0, 0.2};

  const State4 inflow = prim_to_cons(1.4, 3.0, 0.0, 1.0);
  p.ic2 = [=](double, double, double* out) { std::copy(inflow.begin(), inflow.end(), out); };
  p.bc.x_lo.kind = BcKind::inflow;
  std::copy(inflow.begin(), inflow.end(), p.bc.x_lo.inflow.begin());
  p.bc.x_hi.kind = BcKind::outflow;
  p.bc.y_lo.kind = BcKind::reflective;
  p.bc.y_hi.kind = BcKind::reflective;
  return p;
}

// Index of a physical coordinate on the face lattice; throws unless aligned.
int face_index(double x, double lo, double d, int n, const char* what) {
  const double f = (x - lo) / d;
  const int i = static_cast<int>(std::lround(f));
  if (i < 0 || i > n || std::fabs(f - i) > 1e-9)
    throw std::invalid_argument(std::string(what) + " is not cell-aligned at this resolution");
  return i;
}

// Exact average of two constant states over a cell cut by x = x0 + y/sqrt(3):
// integrate the clamped post-shock width across the cell's y extent.
double oblique_post_fraction(double xa, double xb, double ya, double yb, double x0,
                             double inv_s3) {
  const double s3 = 1.0 / inv_s3;
  const double y_at_xa = (xa - x0) * s3;  // shock passes cell's left face here
  const double y_at_xb = (xb - x0) * s3;
  const double dx = xb - xa;
  const double dy = yb - ya;
  // Below y_at_xa the post region misses the cell; above y_at_xb it spans it.
  const double l = std::clamp(y_at_xa, ya, yb);
  const double h = std::clamp(y_at_xb, ya, yb);
  double area = dx * (yb - h);
  if (h > l) area += (x0 - xa) * (h - l) + (h * h - l * l) * 0.5 * inv_s3;
  return area / (dx * dy);
}

}  // namespace

Problem make_problem(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "lae-sine") return make_lae_sine();
  if (key == "lae-critical") return make_lae_critical();
  if (key == "slp") return make_slp();
  if (key == "bicwp") return make_bicwp();
  if (key == "step-ic") return make_step_ic();
  if (key == "blast") return make_blast();
  if (key == "titarev-toro") return make_titarev_toro();
  if (key == "riemann2d") return make_riemann2d();
  if (key == "dmr") return make_dmr();
  if (key == "ffs") return make_ffs();
  throw std::invalid_argument("unknown problem: " + key);
}

std::vector<std::string> problem_names() {
  return {"lae-sine", "lae-critical", "slp",       "bicwp", "step-ic",
          "blast",    "titarev-toro", "riemann2d", "dmr",   "ffs"};
}

CellField initial_field(const Problem& p, int n) {
  if (p.system == SystemKind::euler2d) throw std::invalid_argument(p.name + " is 2D");
  if (n < 2 * kGhost) throw std::invalid_argument("grid too coarse for the stencil");
  Grid1D g = p.grid;
  g.n = n;
  CellField u(g, p.system == SystemKind::advection ? 1 : 3);
  cell_average_init(u, p.ic, p.breaks);
  return u;
}

CellField2D initial_field_2d(const Problem& p, int nx, int ny) {
  if (p.system != SystemKind::euler2d) throw std::invalid_argument(p.name + " is 1D");
  Grid2D g = p.grid2;
  g.nx = nx;
  g.ny = ny;
  if (p.blank_phys) {
    const auto& r = *p.blank_phys;
    g.blank = BlankRect{face_index(r.x0, g.x0, g.dx(), nx, "blank x0"),
                        face_index(r.x1, g.x0, g.dx(), nx, "blank x1"),
                        face_index(r.y0, g.y0, g.dy(), ny, "blank y0"),
                        face_index(r.y1, g.y0, g.dy(), ny, "blank y1")};
  }
  CellField2D u(g, 4);
  if (p.oblique_shock_init) {
    const double x0 = 1.0 / 6.0;
    const double inv_s3 = 1.0 / std::sqrt(3.0);
    State4 post, pre;
    p.ic2(0.0, 0.5, post.data());  // any point left of the shock foot line
    p.ic2(4.0, 0.0, pre.data());
    for (int j = 0; j < ny; ++j) {
      const double ya = g.y0 + j * g.dy();
      for (int i = 0; i < nx; ++i) {
        const double xa = g.x0 + i * g.dx();
        const double f =
            oblique_post_fraction(xa, xa + g.dx(), ya, ya + g.dy(), x0, inv_s3);
        for (int c = 0; c < 4; ++c) u(i, j, c) = f * post[c] + (1.0 - f) * pre[c];
      }
    }
  } else {
    cell_average_init(u, p.ic2, p.x_breaks, p.y_breaks);
  }
  return u;
}

CellField exact_advection(const Problem& p, int n, double t) {
  if (p.system != SystemKind::advection || !p.has_exact_advection)
    throw std::invalid_argument("exact profile only defined for advection problems");
  Grid1D g = p.grid;
  g.n = n;
  const double L = g.length();
  const double shift = p.advection_speed * t;

  // Averages of the periodically wrapped, shifted profile. The seam x0 (== x1
  // mod L) counts as a breakpoint since the wrap can be discontinuous there.
  std::vector<double> base = p.breaks;
  base.push_back(g.x0);
  std::vector<double> cuts;
  for (double b : base) {
    double pos = b + shift;
    pos -= std::floor((pos - g.x0) / L) * L;  // representative in [x0, x1)
    for (double x = pos - L; x < g.x1 + L; x += L)
      if (x > g.x0 - L && x < g.x1 + L) cuts.push_back(x);
  }

  const auto& ic = p.ic;
  const double x0 = g.x0;
  VectorFn shifted = [&ic, x0, L, shift](double x, double* out) {
    double xi = x - shift;
    xi -= std::floor((xi - x0) / L) * L;
    ic(xi, out);
  };

  CellField u(g, 1);
  cell_average_init(u, shifted, cuts);
  return u;
}

}  // namespace mapweno
