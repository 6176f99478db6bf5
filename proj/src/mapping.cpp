//! \file mapping.cpp
//! \brief mapping dispatch, adaptive exponents, validation, naming

#include "mapweno/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mapweno {

const char* to_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::js: return "js";
    case MappingKind::m: return "m";
    case MappingKind::im: return "im";
    case MappingKind::maim1: return "maim1";
    case MappingKind::maim2: return "maim2";
    case MappingKind::maim3: return "maim3";
    case MappingKind::maim4: return "maim4";
    case MappingKind::maim5: return "maim5";
  }
  return "?";
}

MappingKind mapping_from_string(std::string_view name) {
  if (name == "js") return MappingKind::js;
  if (name == "m") return MappingKind::m;
  if (name == "im") return MappingKind::im;
  if (name == "maim1") return MappingKind::maim1;
  if (name == "maim2") return MappingKind::maim2;
  if (name == "maim3") return MappingKind::maim3;
  if (name == "maim4") return MappingKind::maim4;
  if (name == "maim5") return MappingKind::maim5;
  throw std::invalid_argument("unknown mapping: " + std::string(name));
}

void validate(MappingKind kind, const MaimParams& p) {
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(to_string(kind)) + ": " + what);
  };
  if (kind == MappingKind::js || kind == MappingKind::m) return;
  if (p.k < 1) fail("k must be a positive integer");
  if (!(p.A > 0.0)) fail("A must be positive");
  if (!(p.delta > 0.0)) fail("delta must be positive");
  if (!(p.eps_a > 0.0)) fail("eps_a must be positive");
  switch (kind) {
    case MappingKind::im:
      if (p.k & 1) fail("k must be even");
      break;
    case MappingKind::maim1:
      if (!(p.ms > 0.0)) fail("ms must be positive");
      break;
    case MappingKind::maim2:
      if (p.Q * p.k < 1.0) fail("Q must be at least 1/k");
      // the flat-segment threshold may not exceed the smallest optimal weight
      if (p.cfs < 0.0 || p.cfs > 0.1) fail("cfs must lie in [0, 0.1]");
      break;
    case MappingKind::maim5:
      if (!(p.C >= 1.0)) fail("C must be at least 1");
      break;
    default:
      break;
  }
}

std::array<double, 2> f_ada(MappingKind kind, const MaimParams& p, const MappingContext& ctx,
                            double w, double d, const std::array<double, 3>& dopt) {
  switch (kind) {
    case MappingKind::maim1:
      return {d / (p.ms * w + p.eps_a), (1.0 - d) / (p.ms * (1.0 - w) + p.eps_a)};
    case MappingKind::maim2: {
      const double hi = 1.0 - (1.0 - d) / d * p.cfs;
      const double e = (w <= p.cfs || w >= hi) ? p.Q * p.k : 1.0;
      return {e, e};
    }
    case MappingKind::maim3: {
      const auto [lo, hi] = std::minmax({ctx.beta[0], ctx.beta[1], ctx.beta[2]});
      const double e = hi / (lo + p.eps_a);
      return {e, e};
    }
    case MappingKind::maim4: {
      const double r0 = ctx.omega_js[0] / dopt[0];
      const double r1 = ctx.omega_js[1] / dopt[1];
      const double r2 = ctx.omega_js[2] / dopt[2];
      const auto [lo, hi] = std::minmax({r0, r1, r2});
      const double e = hi / (lo + p.eps_a);
      return {e, e};
    }
    case MappingKind::maim5:
      return {p.C, p.C};
    default:
      throw std::logic_error("f_ada: not an adaptive mapping");
  }
}

double g_maim(MappingKind kind, const MaimParams& p, const MappingContext& ctx, double w,
              double d, const std::array<double, 3>& dopt) {
  switch (kind) {
    case MappingKind::js: return w;
    case MappingKind::m: return g_m(w, d);
    case MappingKind::im: return g_im(w, d, p.k, p.A);
    default: break;
  }
  const auto [e0, e1] = f_ada(kind, p, ctx, w, d, dopt);
  const double f = f_maim(w, d, p.k, p.A, p.delta);
  return g_maim_core(w, d, p.k, f, e0, e1);
}

std::array<double, 3> apply_mapping(MappingKind kind, const MaimParams& p,
                                    const MappingContext& ctx, const std::array<double, 3>& w,
                                    const std::array<double, 3>& dopt) {
  if (kind == MappingKind::js) return w;
  std::array<double, 3> g;
  for (int s = 0; s < 3; ++s) g[s] = g_maim(kind, p, ctx, w[s], dopt[s], dopt);
  const double inv = 1.0 / (g[0] + g[1] + g[2]);
  return {g[0] * inv, g[1] * inv, g[2] * inv};
}

}  // namespace mapweno
