#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nufv/limiters.hpp"
#include "nufv/runner.hpp"

namespace nufv::analysis {

/// Size-weighted L1 norm: sum_i w_i |u_i - ref_i|.
double l1_error(std::span<const double> weights, std::span<const double> values,
                std::span<const double> reference);

/// R = (log E1 - log E2) / (log h1 - log h2).
double convergence_rate(double e1, double h1, double e2, double h2);

/// Interior total variation sum_i |u_{i+1} - u_i|.
double total_variation(std::span<const double> u);

std::vector<double> tv_series(const std::vector<std::vector<double>>& history);

/// Piecewise-linear interpolation of (x, y) samples at q; x ascending,
/// q inside [x.front(), x.back()].
double interp_linear(std::span<const double> x, std::span<const double> y, double q);

std::vector<double> extract_prim(const solver::Field1D& f, const euler::GasModel& gas, char var);
std::vector<double> extract_prim(const solver::Field2D& f, const euler::GasModel& gas, char var);

struct RateStudyRequest {
  std::string problem = "smooth1d";  // smooth1d | vortex2d
  std::vector<limiters::LimiterSpec> schemes;
  std::vector<int> sizes;  // cells per axis, ascending
  double perturb_r = 0.2;
  std::uint64_t seed = 0;
  double cfl = 0.6;
  double t_end = -1.0;      // <0: 0.1 for smooth1d, the full period for vortex2d
  int reference_n = 25600;  // fine-grid reference resolution (smooth1d)
  bool entropy_fix = true;
  solver::LimitVars limit_vars = solver::LimitVars::Primitive;
};

struct RateRow {
  limiters::LimiterSpec scheme;
  std::string variable;  // rho | u | v | p
  int n_coarse = 0, n_fine = 0;
  double e_coarse = 0.0, e_fine = 0.0;
  double rate = 0.0;
};

struct RateTable {
  std::vector<RateRow> rows;
  /// Rate of the finest mesh pair for one scheme and variable.
  double finest_rate(const limiters::LimiterSpec& scheme, const std::string& variable) const;
};

/// Runs the ladder of meshes for every scheme, computes per-variable L1
/// errors against the problem's reference and the pairwise rates. Every mesh
/// size uses its own sub-seed derived from the request seed.
RateTable rate_study(const RateStudyRequest& req);

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag);

void write_rates_csv(std::ostream& os, const RateTable& table);
void write_rates_markdown(std::ostream& os, const RateTable& table);

}  // namespace nufv::analysis
