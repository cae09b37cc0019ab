#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nufv/euler.hpp"
#include "nufv/limiters.hpp"
#include "nufv/mesh.hpp"

namespace nufv::solver {

enum class BCType { Periodic, ReflectiveWall, SupersonicInflow, NeumannOutflow, DirichletExact };

template <int Dim>
struct SideBC {
  BCType type = BCType::Periodic;
  euler::Prim<Dim> state{};  // SupersonicInflow
  // DirichletExact: primitive state as a function of position and time,
  // evaluated at ghost-cell centers.
  std::function<euler::Prim<Dim>(const std::array<double, Dim>&, double)> exact;
};

template <int Dim>
SideBC<Dim> periodic_bc() {
  return {BCType::Periodic, {}, nullptr};
}
template <int Dim>
SideBC<Dim> wall_bc() {
  return {BCType::ReflectiveWall, {}, nullptr};
}
template <int Dim>
SideBC<Dim> inflow_bc(const euler::Prim<Dim>& state) {
  return {BCType::SupersonicInflow, state, nullptr};
}
template <int Dim>
SideBC<Dim> neumann_bc() {
  return {BCType::NeumannOutflow, {}, nullptr};
}
template <int Dim>
SideBC<Dim> dirichlet_bc(std::function<euler::Prim<Dim>(const std::array<double, Dim>&, double)> f) {
  return {BCType::DirichletExact, {}, std::move(f)};
}

enum class LimitVars { Conservative, Primitive };

struct SchemeConfig {
  limiters::LimiterSpec limiter;
  euler::GasModel gas;
  euler::EntropyFix entropy_fix;
  LimitVars limit_vars = LimitVars::Primitive;
};

struct TimeControls {
  double cfl = 0.6;     // Courant number applied to the reference cell size
  double t_end = 0.0;
};

struct Field1D {
  mesh::Grid1D grid;
  std::vector<euler::Cons<1>> u;
};

struct Field2D {
  mesh::Grid2D grid;
  std::vector<euler::Cons<2>> u;      // row-major, idx = j*nx + i
  std::vector<std::uint8_t> active;   // empty: every cell active

  int nx() const { return grid.x.n(); }
  int ny() const { return grid.y.n(); }
  int idx(int i, int j) const { return j * nx() + i; }
  bool is_active(int i, int j) const { return active.empty() || active[idx(i, j)] != 0; }
};

/// Per-side boundary conditions of a 2D domain; each callback receives the
/// transverse cell-center coordinate, so a side may mix types (the double
/// Mach reflection's lower boundary does).
struct BoundarySpec2D {
  std::function<SideBC<2>(double)> xlo, xhi, ylo, yhi;
};

BoundarySpec2D uniform_bcs_2d(const SideBC<2>& xlo, const SideBC<2>& xhi, const SideBC<2>& ylo,
                              const SideBC<2>& yhi);

template <int Dim>
struct FaceStates {
  euler::Cons<Dim> left, right;
};

/// MUSCL sweep along one contiguous run of cells. Fills two ghost cells per
/// side from the closures, limits slopes (conservative or primitive
/// variables), reconstructs face states and evaluates the Roe flux.
template <int Dim>
class SegmentSweeper {
 public:
  explicit SegmentSweeper(const SchemeConfig& scheme) : scheme_(scheme) {}

  /// Linear reconstruction to both sides of each of the M+1 faces.
  /// states/sizes hold the M segment cells; face_lo is the coordinate of the
  /// leftmost face along the sweep axis, transverse the fixed other
  /// coordinate (ignored for Dim == 1).
  void face_states(std::span<const double> sizes, std::span<const euler::Cons<Dim>> states,
                   int axis, double face_lo, double transverse, double t, const SideBC<Dim>& lo,
                   const SideBC<Dim>& hi, std::vector<FaceStates<Dim>>& out);

  /// Roe fluxes on the reconstructed face states; out receives M+1 entries.
  void fluxes(std::span<const double> sizes, std::span<const euler::Cons<Dim>> states, int axis,
              double face_lo, double transverse, double t, const SideBC<Dim>& lo,
              const SideBC<Dim>& hi, std::vector<euler::Cons<Dim>>& out);

 private:
  using Vars = std::array<double, Dim + 2>;

  void fill_ghosts(std::span<const double> sizes, std::span<const euler::Cons<Dim>> states,
                   int axis, double face_lo, double transverse, double t, const SideBC<Dim>& lo,
                   const SideBC<Dim>& hi);

  SchemeConfig scheme_;
  std::vector<double> esize_;
  std::vector<euler::Cons<Dim>> estate_;
  std::vector<Vars> evars_;
  std::vector<Vars> slope_;
  std::vector<FaceStates<Dim>> faces_;
};

/// dU/dt = -(F_{i+1/2} - F_{i-1/2})/dx_i.
void residual(const Field1D& field, const SchemeConfig& scheme, const SideBC<1>& left,
              const SideBC<1>& right, double t, std::vector<euler::Cons<1>>& dudt);

/// Unsplit 2D residual: x-flux and y-flux differences summed per active cell;
/// mask boundaries close with reflective walls.
void residual(const Field2D& field, const SchemeConfig& scheme, const BoundarySpec2D& bcs,
              double t, std::vector<euler::Cons<2>>& dudt);

/// dt = cfl * h / max_i (|u|+c).
double stable_dt(const Field1D& field, const SchemeConfig& scheme, const TimeControls& controls);

/// dt = cfl / max_ij (s_x/h_x + s_y/h_y).
double stable_dt(const Field2D& field, const SchemeConfig& scheme, const TimeControls& controls);

/// One Heun (TVD RK2) step with the given dt; throws on non-physical states
/// with the offending cell index.
void advance_tvd_rk2(Field1D& field, const SchemeConfig& scheme, const SideBC<1>& left,
                     const SideBC<1>& right, double t, double dt);
void advance_tvd_rk2(Field2D& field, const SchemeConfig& scheme, const BoundarySpec2D& bcs,
                     double t, double dt);

void check_physical(const Field1D& field, const euler::GasModel& gas, double t);
void check_physical(const Field2D& field, const euler::GasModel& gas, double t);

}  // namespace nufv::solver
