#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "nufv/problems.hpp"
#include "nufv/solver.hpp"

namespace nufv::runner {

struct DiagnosticsRow {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double tv_rho = 0.0;  // interior density TV; 0 in 2D
  double min_rho = 0.0;
  double min_p = 0.0;
};

mesh::Grid1D make_grid(const problems::Problem1D& pb, int n, double perturb_r,
                       std::uint64_t seed);
mesh::Grid2D make_grid(const problems::Problem2D& pb, int nx, int ny, double perturb_r,
                       std::uint64_t seed);

/// Cell-center sampling of the initial condition; blanked cells of a masked
/// problem keep the (unused) sampled value and are flagged inactive.
solver::Field1D init_field(const problems::Problem1D& pb, const mesh::Grid1D& grid,
                           const euler::GasModel& gas);
solver::Field2D init_field(const problems::Problem2D& pb, const mesh::Grid2D& grid,
                           const euler::GasModel& gas);

struct RunResult1D {
  solver::Field1D field;
  std::vector<DiagnosticsRow> diagnostics;
  double t_final = 0.0;
};
struct RunResult2D {
  solver::Field2D field;
  std::vector<DiagnosticsRow> diagnostics;
  double t_final = 0.0;
};

/// CFL-controlled loop to t_end (controls.t_end <= 0 picks the problem's
/// default); the final step is shortened to land on t_end exactly.
/// output_times must be ascending; on_output fires once per entry.
RunResult1D run(const problems::Problem1D& pb, const mesh::Grid1D& grid,
                const solver::SchemeConfig& scheme, solver::TimeControls controls,
                const std::vector<double>& output_times = {},
                const std::function<void(double, const solver::Field1D&)>& on_output = nullptr);

RunResult2D run(const problems::Problem2D& pb, const mesh::Grid2D& grid,
                const solver::SchemeConfig& scheme, solver::TimeControls controls,
                const std::vector<double>& output_times = {},
                const std::function<void(double, const solver::Field2D&)>& on_output = nullptr);

/// `x,rho,u,p,e` / `x,y,rho,u,v,p,e`, one row per active cell.
void write_solution_csv(std::ostream& os, const solver::Field1D& field,
                        const euler::GasModel& gas);
void write_solution_csv(std::ostream& os, const solver::Field2D& field,
                        const euler::GasModel& gas);

/// `step,t,dt,tv_rho,min_rho,min_p`.
void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRow>& rows);

}  // namespace nufv::runner
