#include "nufv/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nufv::problems {

namespace {

constexpr double kPi = std::numbers::pi;

euler::Prim<1> prim1(double rho, double u, double p) { return {rho, {u}, p}; }
euler::Prim<2> prim2(double rho, double u, double v, double p) { return {rho, {u, v}, p}; }

}  // namespace

Problem1D smooth_euler_1d() {
  Problem1D pb;
  pb.name = "smooth1d";
  pb.a = -1.0;
  pb.b = 1.0;
  pb.ic = [](double x) {
    const double s = 0.5 * std::sin(kPi * x);
    return prim1(1.0 + s, 2.0 + s, 1.0 + s);
  };
  pb.left = solver::periodic_bc<1>();
  pb.right = solver::periodic_bc<1>();
  pb.t_end = 6.0;
  pb.reference = Reference::FineGrid;
  return pb;
}

Problem2D isentropic_vortex_2d() {
  Problem2D pb;
  pb.name = "vortex2d";
  pb.ax = pb.ay = -5.0;
  pb.bx = pb.by = 5.0;
  const double eps = 5.0;
  const double gamma = euler::GasModel{}.gamma;
  pb.ic = [eps, gamma](double x, double y) {
    const double r2 = x * x + y * y;
    const double e1 = std::exp(0.5 * (1.0 - r2));
    const double u = 1.0 - eps * y / (2.0 * kPi) * e1;
    const double v = 1.0 + eps * x / (2.0 * kPi) * e1;
    const double core =
        1.0 - (gamma - 1.0) * eps * eps / (8.0 * gamma * kPi * kPi) * std::exp(1.0 - r2);
    const double rho = std::pow(core, 1.0 / (gamma - 1.0));
    const double p = std::pow(core, gamma / (gamma - 1.0));
    return prim2(rho, u, v, p);
  };
  pb.bcs = solver::uniform_bcs_2d(solver::periodic_bc<2>(), solver::periodic_bc<2>(),
                                  solver::periodic_bc<2>(), solver::periodic_bc<2>());
  pb.t_end = 10.0;
  pb.reference = Reference::AnalyticPeriod;
  return pb;
}

Problem1D sod_shock_tube() {
  Problem1D pb;
  pb.name = "sod";
  pb.a = -2.0;
  pb.b = 2.0;
  pb.ic = [](double x) { return x < 0.0 ? prim1(1.0, 0.0, 1.0) : prim1(0.125, 0.0, 0.1); };
  pb.left = solver::neumann_bc<1>();
  pb.right = solver::neumann_bc<1>();
  pb.t_end = 0.8;
  return pb;
}

Problem1D double_shock() {
  Problem1D pb;
  pb.name = "double_shock";
  pb.a = -3.0;
  pb.b = 3.0;
  pb.ic = [](double x) { return x < 0.0 ? prim1(1.0, 3.0, 1.0) : prim1(2.0, 1.0, 1.0); };
  pb.left = solver::neumann_bc<1>();
  pb.right = solver::neumann_bc<1>();
  pb.t_end = 0.8;
  return pb;
}

Problem1D blast_wave() {
  Problem1D pb;
  pb.name = "blast";
  pb.a = 0.0;
  pb.b = 1.0;
  pb.ic = [](double x) {
    if (x < 0.1) return prim1(1.0, 0.0, 1000.0);
    if (x < 0.9) return prim1(1.0, 0.0, 0.01);
    return prim1(1.0, 0.0, 100.0);
  };
  pb.left = solver::wall_bc<1>();
  pb.right = solver::wall_bc<1>();
  pb.t_end = 0.038;
  return pb;
}

Problem2D wind_tunnel_step() {
  Problem2D pb;
  pb.name = "step";
  pb.ax = 0.0;
  pb.bx = 3.0;
  pb.ay = 0.0;
  pb.by = 1.0;
  const euler::Prim<2> inflow = prim2(1.4, 3.0, 0.0, 1.0);
  pb.ic = [inflow](double, double) { return inflow; };
  pb.bcs = solver::uniform_bcs_2d(solver::inflow_bc<2>(inflow), solver::neumann_bc<2>(),
                                  solver::wall_bc<2>(), solver::wall_bc<2>());
  pb.blanked = [](double x, double y) { return x > 0.6 && y < 0.2; };
  pb.t_end = 4.0;
  return pb;
}

double dmr_shock_front_x(double t) { return 1.0 / 6.0 + (1.0 + 20.0 * t) / std::sqrt(3.0); }

Problem2D double_mach_reflection() {
  Problem2D pb;
  pb.name = "dmr";
  pb.ax = 0.0;
  pb.bx = 4.0;
  pb.ay = 0.0;
  pb.by = 1.0;
  const euler::Prim<2> post =
      prim2(8.0, 8.25 * std::cos(kPi / 6.0), -8.25 * std::sin(kPi / 6.0), 116.5);
  const euler::Prim<2> pre = prim2(1.4, 0.0, 0.0, 1.0);
  pb.ic = [post, pre](double x, double y) {
    return x < 1.0 / 6.0 + y / std::sqrt(3.0) ? post : pre;
  };

  auto top_state = [post, pre](const std::array<double, 2>& xy, double t) {
    return xy[0] < dmr_shock_front_x(t) ? post : pre;
  };
  const auto post_fixed = [post](const std::array<double, 2>&, double) { return post; };

  pb.bcs.xlo = [post](double) { return solver::inflow_bc<2>(post); };
  pb.bcs.xhi = [](double) { return solver::neumann_bc<2>(); };
  pb.bcs.ylo = [post_fixed](double x) {
    return x < 1.0 / 6.0 ? solver::dirichlet_bc<2>(post_fixed) : solver::wall_bc<2>();
  };
  pb.bcs.yhi = [top_state](double) { return solver::dirichlet_bc<2>(top_state); };
  pb.t_end = 0.2;
  return pb;
}

int dimension_of(const std::string& name) {
  if (name == "smooth1d" || name == "sod" || name == "double_shock" || name == "blast") return 1;
  if (name == "vortex2d" || name == "step" || name == "dmr") return 2;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::variant<Problem1D, Problem2D> by_name(const std::string& name) {
  if (name == "smooth1d") return smooth_euler_1d();
  if (name == "sod") return sod_shock_tube();
  if (name == "double_shock") return double_shock();
  if (name == "blast") return blast_wave();
  if (name == "vortex2d") return isentropic_vortex_2d();
  if (name == "step") return wind_tunnel_step();
  if (name == "dmr") return double_mach_reflection();
  throw std::invalid_argument("unknown problem '" + name + "'");
}

}  // namespace nufv::problems
