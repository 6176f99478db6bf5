//! \file mapping.hpp
//! \brief weight mapping functions: Henrick mapping, IM(k,A), and the adaptive MAIM family

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace mapweno {

enum class MappingKind : std::uint8_t {
  js,  // unmapped nonlinear weights
  m,   // Henrick mapping
  im,  // IM(k, A)
  maim1,
  maim2,
  maim3,
  maim4,
  maim5,
};

const char* to_string(MappingKind kind);
MappingKind mapping_from_string(std::string_view name);

//! Parameters of the MAIM family; IM reads k and A, the rest are per-variant knobs.
struct MaimParams {
  int k = 10;           // flatness exponent
  double A = 1e-6;      // mapping amplitude
  double ms = 0.06;     // variant-1 exponent slope
  double Q = 10.0;      // variant-2 exponent scale
  double cfs = 1e-6;    // variant-2 smoothness threshold; 0 selects the IM-equivalent limit
  double C = 1.0;       // variant-5 constant exponent
  double delta = 1e-6;  // smoothed-signum half width
  double eps_a = 1e-10; // regularization of the adaptive exponents
};

//! Throws std::invalid_argument when a parameter is outside its admissible range.
void validate(MappingKind kind, const MaimParams& p);

//! Per-interface data the adaptive exponents of variants 3 and 4 feed on.
struct MappingContext {
  std::array<double, 3> beta{};      // smoothness indicators of the interface
  std::array<double, 3> omega_js{};  // its unmapped nonlinear weights
};

namespace detail {

inline double pow_int(double x, int k) {
  double r = 1.0;
  double b = x;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// b^e for b in [0,1] and e >= 0, with the 0^0 = 1 endpoint convention.
inline double pow01(double b, double e) {
  if (e == 0.0) return 1.0;
  if (b <= 0.0) return 0.0;
  if (e == 1.0) return b;
  return std::pow(b, e);
}

}  // namespace detail

//! Henrick mapping; fixed points 0, d, 1 and g'(d) = g''(d) = 0. Written as
//! identity plus correction so the fixed points cancel exactly in floats.
inline double g_m(double w, double d) {
  return w + w * (1.0 - w) * (d - w) / (d * d + (1.0 - 2.0 * d) * w);
}

//! IM mapping with even flatness exponent k and amplitude A.
inline double g_im(double w, double d, int k, double A) {
  const double x = w - d;
  const double xk = detail::pow_int(x, k);
  return d + xk * x * A / (xk * A + w * (1.0 - w));
}

//! Smoothed signum: exact sign outside the delta band, continuous through 0 inside it.
inline double sg_smooth(double x, double delta, int k) {
  const double ax = std::fabs(x);
  if (ax >= delta) return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  return x / (detail::pow_int(delta * delta - x * x, k + 3) + ax);
}

//! Mapping amplitude factor: A for even k, A*sg(w - d) for odd k.
inline double f_maim(double w, double d, int k, double A, double delta) {
  if ((k & 1) == 0) return A;
  return A * sg_smooth(w - d, delta, k);
}

//! Shared MAIM kernel for a fixed exponent pair (e0, e1). Both denominator
//! terms are nonnegative; when w^e0 (1-w)^e1 underflows the map degenerates
//! to the identity (and to 0/0 if additionally w == d), hence the guard.
inline double g_maim_core(double w, double d, int k, double f, double e0, double e1) {
  const double x = w - d;
  const double xk = detail::pow_int(x, k);
  // Equal exponents (every variant but the first) collapse to one power.
  const double t = e0 == e1 ? detail::pow01(w * (1.0 - w), e0)
                            : detail::pow01(w, e0) * detail::pow01(1.0 - w, e1);
  const double den = f * xk + t;
  if (den == 0.0) return w;
  return d + f * xk * x / den;
}

//! Adaptive exponent pair (e0, e1) for one stencil with optimal weight d.
//! dopt carries the full optimal-weight triple needed by variant 4.
std::array<double, 2> f_ada(MappingKind kind, const MaimParams& p, const MappingContext& ctx,
                            double w, double d, const std::array<double, 3>& dopt);

//! Full mapping evaluation for one stencil; dispatches on the variant.
double g_maim(MappingKind kind, const MaimParams& p, const MappingContext& ctx, double w,
              double d, const std::array<double, 3>& dopt);

//! Maps a weight triple and renormalizes. js passes through unchanged.
std::array<double, 3> apply_mapping(MappingKind kind, const MaimParams& p,
                                    const MappingContext& ctx, const std::array<double, 3>& w,
                                    const std::array<double, 3>& dopt);

}  // namespace mapweno
