#include "nufv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nufv/analysis.hpp"

namespace nufv::runner {

namespace {

constexpr double kTimeEps = 1e-12;

double field_min_rho(const solver::Field1D& f) {
  double m = f.u.front().rho();
  for (const auto& w : f.u) m = std::min(m, w.rho());
  return m;
}

double field_min_p(const solver::Field1D& f, const euler::GasModel& gas) {
  double m = std::numeric_limits<double>::max();
  for (const auto& w : f.u) {
    const double ke = 0.5 * w.mom(0) * w.mom(0) / w.rho();
    m = std::min(m, (gas.gamma - 1.0) * (w.energy() - ke));
  }
  return m;
}

double field_tv_rho(const solver::Field1D& f) {
  std::vector<double> rho(f.u.size());
  for (size_t i = 0; i < f.u.size(); ++i) rho[i] = f.u[i].rho();
  return analysis::total_variation(rho);
}

double field_min_rho(const solver::Field2D& f) {
  double m = std::numeric_limits<double>::max();
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i)
      if (f.is_active(i, j)) m = std::min(m, f.u[f.idx(i, j)].rho());
  return m;
}

double field_min_p(const solver::Field2D& f, const euler::GasModel& gas) {
  double m = std::numeric_limits<double>::max();
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i) {
      if (!f.is_active(i, j)) continue;
      const auto& w = f.u[f.idx(i, j)];
      const double ke = 0.5 * (w.mom(0) * w.mom(0) + w.mom(1) * w.mom(1)) / w.rho();
      m = std::min(m, (gas.gamma - 1.0) * (w.energy() - ke));
    }
  return m;
}

}  // namespace

mesh::Grid1D make_grid(const problems::Problem1D& pb, int n, double perturb_r,
                       std::uint64_t seed) {
  mesh::Grid1D g = mesh::uniform_grid(pb.a, pb.b, n);
  if (perturb_r > 0.0) g = mesh::perturb_grid(g, {perturb_r, seed});
  return g;
}

mesh::Grid2D make_grid(const problems::Problem2D& pb, int nx, int ny, double perturb_r,
                       std::uint64_t seed) {
  mesh::Grid2D g = mesh::uniform_grid_2d(pb.ax, pb.bx, nx, pb.ay, pb.by, ny);
  if (perturb_r > 0.0) g = mesh::perturb_grid_2d(g, {perturb_r, seed});
  return g;
}

solver::Field1D init_field(const problems::Problem1D& pb, const mesh::Grid1D& grid,
                           const euler::GasModel& gas) {
  solver::Field1D f;
  f.grid = grid;
  f.u.resize(grid.n());
  for (int i = 0; i < grid.n(); ++i)
    f.u[i] = euler::prim_to_cons(pb.ic(grid.centers[i]), gas);
  return f;
}

solver::Field2D init_field(const problems::Problem2D& pb, const mesh::Grid2D& grid,
                           const euler::GasModel& gas) {
  solver::Field2D f;
  f.grid = grid;
  const int nx = grid.x.n(), ny = grid.y.n();
  f.u.resize(static_cast<size_t>(nx) * ny);
  if (pb.blanked) f.active.assign(f.u.size(), 1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double x = grid.x.centers[i], y = grid.y.centers[j];
      f.u[f.idx(i, j)] = euler::prim_to_cons(pb.ic(x, y), gas);
      if (pb.blanked && pb.blanked(x, y)) f.active[f.idx(i, j)] = 0;
    }
  return f;
}

namespace {

/// Shared stepping loop; Advance performs one RK2 step, Observe records one
/// diagnostics row.
template <class Field, class Advance, class Observe, class Output>
double time_loop(Field& field, double t_end, const solver::SchemeConfig& scheme,
                 const solver::TimeControls& controls, const std::vector<double>& output_times,
                 Advance&& advance, Observe&& observe, Output&& output) {
  double t = 0.0;
  long step = 0;
  size_t next_out = 0;
  while (next_out < output_times.size() && output_times[next_out] <= kTimeEps) {
    output(output_times[next_out], field);
    ++next_out;
  }
  if (t_end <= kTimeEps) return 0.0;
  while (t < t_end - kTimeEps) {
    double dt = solver::stable_dt(field, scheme, controls);
    if (next_out < output_times.size()) dt = std::min(dt, output_times[next_out] - t);
    dt = std::min(dt, t_end - t);
    advance(field, t, dt);
    t += dt;
    ++step;
    observe(step, t, dt, field);
    if (next_out < output_times.size() && t >= output_times[next_out] - kTimeEps) {
      output(output_times[next_out], field);
      ++next_out;
    }
  }
  return t;
}

}  // namespace

RunResult1D run(const problems::Problem1D& pb, const mesh::Grid1D& grid,
                const solver::SchemeConfig& scheme, solver::TimeControls controls,
                const std::vector<double>& output_times,
                const std::function<void(double, const solver::Field1D&)>& on_output) {
  RunResult1D res;
  res.field = init_field(pb, grid, scheme.gas);
  const double t_end = controls.t_end > 0.0 ? controls.t_end : pb.t_end;
  res.t_final = time_loop(
      res.field, t_end, scheme, controls, output_times,
      [&](solver::Field1D& f, double t, double dt) {
        solver::advance_tvd_rk2(f, scheme, pb.left, pb.right, t, dt);
      },
      [&](long step, double t, double dt, const solver::Field1D& f) {
        res.diagnostics.push_back(
            {step, t, dt, field_tv_rho(f), field_min_rho(f), field_min_p(f, scheme.gas)});
      },
      [&](double t, const solver::Field1D& f) {
        if (on_output) on_output(t, f);
      });
  return res;
}

RunResult2D run(const problems::Problem2D& pb, const mesh::Grid2D& grid,
                const solver::SchemeConfig& scheme, solver::TimeControls controls,
                const std::vector<double>& output_times,
                const std::function<void(double, const solver::Field2D&)>& on_output) {
  RunResult2D res;
  res.field = init_field(pb, grid, scheme.gas);
  const double t_end = controls.t_end > 0.0 ? controls.t_end : pb.t_end;
  res.t_final = time_loop(
      res.field, t_end, scheme, controls, output_times,
      [&](solver::Field2D& f, double t, double dt) {
        solver::advance_tvd_rk2(f, scheme, pb.bcs, t, dt);
      },
      [&](long step, double t, double dt, const solver::Field2D& f) {
        res.diagnostics.push_back(
            {step, t, dt, 0.0, field_min_rho(f), field_min_p(f, scheme.gas)});
      },
      [&](double t, const solver::Field2D& f) {
        if (on_output) on_output(t, f);
      });
  return res;
}

void write_solution_csv(std::ostream& os, const solver::Field1D& field,
                        const euler::GasModel& gas) {
  os << "x,rho,u,p,e\n";
  os.precision(12);
  for (int i = 0; i < field.grid.n(); ++i) {
    const euler::Prim<1> q = euler::cons_to_prim(field.u[i], gas);
    const double e = q.p / ((gas.gamma - 1.0) * q.rho);
    os << field.grid.centers[i] << ',' << q.rho << ',' << q.vel[0] << ',' << q.p << ',' << e
       << '\n';
  }
}

void write_solution_csv(std::ostream& os, const solver::Field2D& field,
                        const euler::GasModel& gas) {
  os << "x,y,rho,u,v,p,e\n";
  os.precision(12);
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      if (!field.is_active(i, j)) continue;
      const euler::Prim<2> q = euler::cons_to_prim(field.u[field.idx(i, j)], gas);
      const double e = q.p / ((gas.gamma - 1.0) * q.rho);
      os << field.grid.x.centers[i] << ',' << field.grid.y.centers[j] << ',' << q.rho << ','
         << q.vel[0] << ',' << q.vel[1] << ',' << q.p << ',' << e << '\n';
    }
}

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRow>& rows) {
  os << "step,t,dt,tv_rho,min_rho,min_p\n";
  os.precision(12);
  for (const auto& r : rows)
    os << r.step << ',' << r.t << ',' << r.dt << ',' << r.tv_rho << ',' << r.min_rho << ','
       << r.min_p << '\n';
}

}  // namespace nufv::runner
