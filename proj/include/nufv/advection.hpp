#pragma once

#include <span>
#include <vector>

#include "nufv/limiters.hpp"
#include "nufv/mesh.hpp"

namespace nufv::advection {

/// One step of linear advection u_t + c u_x = 0 on a periodic non-uniform
/// grid, advanced by the exact reconstruct-evolve-project update. Valid for
/// per-cell Courant numbers |c| dt / dx_i in [0, 1].
struct RepState {
  const mesh::Grid1D* grid = nullptr;
  std::vector<double> u;  // cell averages, length grid->n()
  double c = 1.0;
  double dt = 0.0;
};

std::vector<double> courant_numbers(const RepState& state);

/// sigma_i = phi_i(theta_i) (u_{i+1}-u_i)/dx_i with the periodic wrap;
/// enhanced flavor takes (A_i, B_i) from the local cell sizes.
std::vector<double> limited_slopes(const RepState& state, const limiters::LimiterSpec& spec);

/// Single-cell slope with explicitly supplied neighbors (no wrap).
double limited_slope_local(const limiters::LimiterSpec& spec, double dx_left, double dx_mid,
                           double dx_right, double u_left, double u_mid, double u_right);

/// Incremental-form coefficients and total-variation record of one step.
/// For c > 0 only coeff_C is populated (coeff_C[i] multiplies u_i - u_{i-1});
/// for c < 0 only coeff_D (coeff_D[i] multiplies u_{i+1} - u_i). Entries whose
/// data difference vanishes carry the neutral value lambda_i.
struct RepDiagnostics {
  std::vector<double> coeff_C;
  std::vector<double> coeff_D;
  std::vector<double> flux_limiter;  // per face i+1/2
  std::vector<double> face_B;        // per face i+1/2
  double tv_before = 0.0;
  double tv_after = 0.0;
};

struct RepResult {
  std::vector<double> u_next;
  RepDiagnostics diag;
};

RepResult rep_step(const RepState& state, std::span<const double> sigma);

/// Finite-volume reformulation u_i - (dt/dx_i)(F_{i+1/2} - F_{i-1/2}) of the
/// same update; agrees with rep_step to roundoff.
std::vector<double> flux_form_update(const RepState& state, std::span<const double> sigma);

/// B_{i+1/2}: 2 dx_i/(dx_i+dx_{i+1}) for c>0, 2 dx_{i+1}/(dx_{i+1}+dx_{i+2})
/// for c<0 (periodic indexing).
double face_coefficient_B(const mesh::Grid1D& grid, int face, int sign_of_c);

/// Flux limiter equivalent to a slope-limiter value phi at cell i.
double equivalent_flux_limiter(const mesh::Grid1D& grid, double phi_value, int i, int sign_of_c);

/// Total variation with the periodic wrap term |u_{N-1} - u_0| included.
double total_variation_periodic(std::span<const double> u);

/// Runs the mirrored problem (reversed sizes and data, negated c) and
/// returns max_i |u_i^{n+1} - v_i^{n+1}| after one step each.
double symmetry_pair_check(const RepState& state, const limiters::LimiterSpec& spec);

}  // namespace nufv::advection
