//! \file grid.hpp
//! \brief uniform cell-centered grids, multi-component cell-average fields, boundary fills

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace mapweno {

inline constexpr int kGhost = 3;  // window half-width of the fifth-order stencil

struct Grid1D {
  double x0 = -1.0;
  double x1 = 1.0;
  int n = 0;

  double dx() const { return (x1 - x0) / n; }
  double face(int i) const { return x0 + i * dx(); }
  double center(int i) const { return x0 + (i + 0.5) * dx(); }
  double length() const { return x1 - x0; }
};

//! Axis-aligned rectangle of excluded cells, given as half-open cell-index ranges.
struct BlankRect {
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
  bool contains(int i, int j) const { return i >= i0 && i < i1 && j >= j0 && j < j1; }
};

struct Grid2D {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int nx = 0, ny = 0;
  std::optional<BlankRect> blank;

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }
  bool is_blank(int i, int j) const { return blank && blank->contains(i, j); }
};

//! Cell-average storage with kGhost ghost layers per side; interior index range [0, n).
class CellField {
 public:
  CellField() = default;
  CellField(const Grid1D& g, int m) : grid_(g), m_(m), data_((g.n + 2 * kGhost) * m, 0.0) {}

  double& operator()(int i, int c) { return data_[(i + kGhost) * m_ + c]; }
  double operator()(int i, int c) const { return data_[(i + kGhost) * m_ + c]; }

  const Grid1D& grid() const { return grid_; }
  int n() const { return grid_.n; }
  int components() const { return m_; }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  Grid1D grid_{};
  int m_ = 1;
  std::vector<double> data_;
};

//! Row-major (j outer, i inner) 2D companion of CellField.
class CellField2D {
 public:
  CellField2D() = default;
  CellField2D(const Grid2D& g, int m)
      : grid_(g), m_(m), pitch_((g.nx + 2 * kGhost) * m),
        data_((g.ny + 2 * kGhost) * (g.nx + 2 * kGhost) * m, 0.0) {}

  double& operator()(int i, int j, int c) {
    return data_[(j + kGhost) * pitch_ + (i + kGhost) * m_ + c];
  }
  double operator()(int i, int j, int c) const {
    return data_[(j + kGhost) * pitch_ + (i + kGhost) * m_ + c];
  }

  const Grid2D& grid() const { return grid_; }
  int nx() const { return grid_.nx; }
  int ny() const { return grid_.ny; }
  int components() const { return m_; }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  Grid2D grid_{};
  int m_ = 1;
  int pitch_ = 0;
  std::vector<double> data_;
};

enum class BcKind { periodic, reflective, outflow, inflow, custom };

//! Fills one ghost cell from a position along the boundary, the time, and the
//! would-be reflected interior state (normal momentum already negated).
using CustomFill =
    std::function<void(double coord, double t, const double* mirror, double* ghost, int m)>;

struct SideBC {
  BcKind kind = BcKind::periodic;
  std::array<double, 4> inflow{};  // conservative ghost state for inflow sides
  CustomFill custom;
};

struct BoundaryCondition {
  SideBC x_lo, x_hi, y_lo, y_hi;
};

//! Populates both ghost regions of a 1D field. reflect_comp is the component whose
//! sign flips under reflection (-1 for none). Throws on mismatched periodic pairing.
void fill_ghosts(CellField& u, const SideBC& lo, const SideBC& hi, double t,
                 int reflect_comp = -1);

//! Same fill applied to a raw contiguous lane of n cells with kGhost pad on each side.
//! coord is the transverse position handed to custom fills.
void fill_lane_ghosts(double* lane, int n, int m, const SideBC& lo, const SideBC& hi, double t,
                      double coord, int reflect_comp);

}  // namespace mapweno
