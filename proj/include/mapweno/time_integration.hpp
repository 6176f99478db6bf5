//! \file time_integration.hpp
//! \brief SSP-RK3 advancement with global Lax-Friedrichs dissipation
//!
//! The wave-speed bound alpha is recomputed from the current stage field before
//! every residual evaluation. Nonpositive density/pressure or non-finite interior
//! values abort the run and are reported as blow-up; values are never clipped.

#pragma once

#include <functional>
#include <vector>

#include "mapweno/euler.hpp"
#include "mapweno/grid.hpp"
#include "mapweno/reconstruction.hpp"

namespace mapweno {

enum class SystemKind { advection, euler1d, euler2d };

struct SystemSpec {
  SystemKind kind = SystemKind::advection;
  double advection_speed = 1.0;
};

struct CflRule {
  double nu = 0.5;
  bool accuracy_scaled = false;  // nu = dx^(2/3), the convergence-table rule

  static CflRule fixed(double nu) { return {nu, false}; }
  static CflRule scaled() { return {0.0, true}; }
};

double courant_number(const CflRule& rule, double dx);
double step_size(const CflRule& rule, double dx, double alpha);
double step_size_2d(const CflRule& rule, double dx, double dy, double ax, double ay);

//! Interior-state scan; ok is false on non-finite values or nonpositive rho/p.
struct FieldCheck {
  bool ok = true;
  double min_rho = 0.0;
  double min_p = 0.0;
};
FieldCheck check_field(const CellField& u, const SystemSpec& sys);
FieldCheck check_field(const CellField2D& u);

//! Largest characteristic speed over interior cells.
double global_alpha(const CellField& u, const SystemSpec& sys);
std::array<double, 2> global_alpha_2d(const CellField2D& u);

struct SweepDiag {
  long eigen_fallbacks = 0;
};

//! Semi-discrete right-hand side -d/dx f. Ghosts of u are overwritten.
void residual(CellField& u, const SystemSpec& sys, const BoundaryCondition& bc, const Scheme& s,
              double alpha, double t, CellField& rhs, SweepDiag* diag = nullptr);
//! Dimension-by-dimension 2D variant for the Euler system.
void residual(CellField2D& u, const BoundaryCondition& bc, const Scheme& s, double ax, double ay,
              double t, CellField2D& rhs, SweepDiag* diag = nullptr);

//! One SSP-RK3 step of du/dt = rhs(u, t) on a plain vector; the field steppers
//! apply the same stage combination.
std::vector<double> rk3_step(
    const std::vector<double>& u, double t, double dt,
    const std::function<std::vector<double>(const std::vector<double>&, double)>& rhs);

struct StepReport {
  double t = 0.0;   // time after the step
  double dt = 0.0;
  double alpha = 0.0;
  long eigen_fallbacks = 0;
  double min_rho = 0.0;
  double min_p = 0.0;
};

struct AdvanceStats {
  bool blow_up = false;
  double t_reached = 0.0;
  long n_steps = 0;
  long eigen_fallbacks = 0;
  double min_rho = 0.0;  // extrema over the whole run (Euler systems)
  double min_p = 0.0;
  std::vector<StepReport> steps;  // filled when record_steps is set
};

//! max_dt > 0 caps every step, e.g. to march two runs on identical times.
AdvanceStats advance_to(CellField& u, const SystemSpec& sys, const BoundaryCondition& bc,
                        const Scheme& s, const CflRule& cfl, double t0, double t_end,
                        bool record_steps = false, double max_dt = 0.0);
AdvanceStats advance_to(CellField2D& u, const BoundaryCondition& bc, const Scheme& s,
                        const CflRule& cfl, double t0, double t_end, bool record_steps = false,
                        double max_dt = 0.0);

}  // namespace mapweno
