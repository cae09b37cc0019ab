#pragma once

#include <functional>
#include <string>
#include <variant>

#include "nufv/euler.hpp"
#include "nufv/solver.hpp"

namespace nufv::problems {

enum class Reference { None, AnalyticPeriod, FineGrid };

struct Problem1D {
  std::string name;
  double a = 0.0, b = 1.0;
  std::function<euler::Prim<1>(double)> ic;
  solver::SideBC<1> left, right;
  euler::GasModel gas;
  double t_end = 0.0;
  Reference reference = Reference::None;
};

struct Problem2D {
  std::string name;
  double ax = 0.0, bx = 1.0, ay = 0.0, by = 1.0;
  std::function<euler::Prim<2>(double, double)> ic;
  solver::BoundarySpec2D bcs;
  euler::GasModel gas;
  double t_end = 0.0;
  std::function<bool(double, double)> blanked;  // null: no mask
  Reference reference = Reference::None;
};

/// rho = 1 + 0.5 sin(pi x), u = 2 + 0.5 sin(pi x), p = 1 + 0.5 sin(pi x) on
/// [-1,1], periodic. Default t_end is the long-time run; convergence studies
/// pick a shorter pre-shock time.
Problem1D smooth_euler_1d();

/// Isentropic vortex (epsilon = 5) advected in the (1,1) direction on
/// [-5,5]^2, periodic; after T = 10 the exact solution equals the data.
Problem2D isentropic_vortex_2d();

Problem1D sod_shock_tube();
Problem1D double_shock();
Problem1D blast_wave();

/// Mach 3 wind tunnel with a step on [0,3]x[0,1], step at x > 0.6, y < 0.2.
Problem2D wind_tunnel_step();

/// Double Mach reflection of a Mach 10 shock on [0,4]x[0,1].
Problem2D double_mach_reflection();

/// Shock-front x-position imposed on the double Mach reflection's upper
/// boundary at time t.
double dmr_shock_front_x(double t);

int dimension_of(const std::string& name);
std::variant<Problem1D, Problem2D> by_name(const std::string& name);

}  // namespace nufv::problems
