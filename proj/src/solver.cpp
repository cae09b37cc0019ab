#include "nufv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nufv::solver {

namespace {

template <int Dim>
euler::Cons<Dim> mirror_state(const euler::Cons<Dim>& w, int axis) {
  euler::Cons<Dim> m = w;
  m.mom(axis) = -m.mom(axis);
  return m;
}

}  // namespace

BoundarySpec2D uniform_bcs_2d(const SideBC<2>& xlo, const SideBC<2>& xhi, const SideBC<2>& ylo,
                              const SideBC<2>& yhi) {
  BoundarySpec2D b;
  b.xlo = [xlo](double) { return xlo; };
  b.xhi = [xhi](double) { return xhi; };
  b.ylo = [ylo](double) { return ylo; };
  b.yhi = [yhi](double) { return yhi; };
  return b;
}

template <int Dim>
void SegmentSweeper<Dim>::fill_ghosts(std::span<const double> sizes,
                                      std::span<const euler::Cons<Dim>> states, int axis,
                                      double face_lo, double transverse, double t,
                                      const SideBC<Dim>& lo, const SideBC<Dim>& hi) {
  const int m = static_cast<int>(states.size());
  esize_.assign(m + 4, 0.0);
  estate_.assign(m + 4, euler::Cons<Dim>{});
  for (int i = 0; i < m; ++i) {
    esize_[i + 2] = sizes[i];
    estate_[i + 2] = states[i];
  }

  const bool periodic = lo.type == BCType::Periodic;
  if (periodic != (hi.type == BCType::Periodic))
    throw std::invalid_argument("periodic boundary must be set on both segment ends");

  auto position = [&](double coord_axis) {
    std::array<double, Dim> x{};
    x[axis] = coord_axis;
    if constexpr (Dim == 2) x[1 - axis] = transverse;
    return x;
  };

  if (periodic) {
    esize_[0] = sizes[(m - 2 + m) % m];
    esize_[1] = sizes[m - 1];
    estate_[0] = states[(m - 2 + m) % m];
    estate_[1] = states[m - 1];
    esize_[m + 2] = sizes[0];
    esize_[m + 3] = sizes[1 % m];
    estate_[m + 2] = states[0];
    estate_[m + 3] = states[1 % m];
    return;
  }

  // Low side.
  switch (lo.type) {
    case BCType::ReflectiveWall:
      esize_[1] = sizes[0];
      esize_[0] = sizes[std::min(1, m - 1)];
      estate_[1] = mirror_state(states[0], axis);
      estate_[0] = mirror_state(states[std::min(1, m - 1)], axis);
      break;
    case BCType::SupersonicInflow:
      esize_[1] = esize_[0] = sizes[0];
      estate_[1] = estate_[0] = euler::prim_to_cons(lo.state, scheme_.gas);
      break;
    case BCType::NeumannOutflow:
      esize_[1] = esize_[0] = sizes[0];
      estate_[1] = estate_[0] = states[0];
      break;
    case BCType::DirichletExact: {
      esize_[1] = esize_[0] = sizes[0];
      const double c1 = face_lo - 0.5 * sizes[0];
      const double c0 = face_lo - 1.5 * sizes[0];
      estate_[1] = euler::prim_to_cons(lo.exact(position(c1), t), scheme_.gas);
      estate_[0] = euler::prim_to_cons(lo.exact(position(c0), t), scheme_.gas);
      break;
    }
    case BCType::Periodic:
      break;  // handled above
  }

  // High side.
  double face_hi = face_lo;
  for (int i = 0; i < m; ++i) face_hi += sizes[i];
  switch (hi.type) {
    case BCType::ReflectiveWall:
      esize_[m + 2] = sizes[m - 1];
      esize_[m + 3] = sizes[std::max(0, m - 2)];
      estate_[m + 2] = mirror_state(states[m - 1], axis);
      estate_[m + 3] = mirror_state(states[std::max(0, m - 2)], axis);
      break;
    case BCType::SupersonicInflow:
      esize_[m + 2] = esize_[m + 3] = sizes[m - 1];
      estate_[m + 2] = estate_[m + 3] = euler::prim_to_cons(hi.state, scheme_.gas);
      break;
    case BCType::NeumannOutflow:
      esize_[m + 2] = esize_[m + 3] = sizes[m - 1];
      estate_[m + 2] = estate_[m + 3] = states[m - 1];
      break;
    case BCType::DirichletExact: {
      esize_[m + 2] = esize_[m + 3] = sizes[m - 1];
      const double c1 = face_hi + 0.5 * sizes[m - 1];
      const double c2 = face_hi + 1.5 * sizes[m - 1];
      estate_[m + 2] = euler::prim_to_cons(hi.exact(position(c1), t), scheme_.gas);
      estate_[m + 3] = euler::prim_to_cons(hi.exact(position(c2), t), scheme_.gas);
      break;
    }
    case BCType::Periodic:
      break;
  }
}

template <int Dim>
void SegmentSweeper<Dim>::face_states(std::span<const double> sizes,
                                      std::span<const euler::Cons<Dim>> states, int axis,
                                      double face_lo, double transverse, double t,
                                      const SideBC<Dim>& lo, const SideBC<Dim>& hi,
                                      std::vector<FaceStates<Dim>>& out) {
  constexpr int ncomp = Dim + 2;
  const int m = static_cast<int>(states.size());
  if (m < 1) throw std::invalid_argument("segment must contain at least one cell");
  fill_ghosts(sizes, states, axis, face_lo, transverse, t, lo, hi);

  const int ext = m + 4;
  evars_.assign(ext, Vars{});
  const bool primitive = scheme_.limit_vars == LimitVars::Primitive;
  for (int j = 0; j < ext; ++j) {
    if (primitive) {
      const euler::Prim<Dim> q = euler::cons_to_prim(estate_[j], scheme_.gas);
      evars_[j][0] = q.rho;
      for (int d = 0; d < Dim; ++d) evars_[j][1 + d] = q.vel[d];
      evars_[j][ncomp - 1] = q.p;
    } else {
      for (int c = 0; c < ncomp; ++c) evars_[j][c] = estate_[j].c[c];
    }
  }

  const auto& spec = scheme_.limiter;
  const bool enhanced =
      spec.flavor == limiters::Flavor::Enhanced && spec.family != limiters::Family::None;

  slope_.assign(ext, Vars{});
  for (int j = 1; j < ext - 1; ++j) {
    limiters::LimiterParams params;
    if (enhanced) {
      const auto [A, B] = mesh::cell_params(esize_[j - 1], esize_[j], esize_[j + 1]);
      params = limiters::make_params(spec.family, A, B);
    }
    for (int c = 0; c < ncomp; ++c) {
      const double dp = evars_[j + 1][c] - evars_[j][c];
      if (dp == 0.0) continue;
      const double theta = (evars_[j][c] - evars_[j - 1][c]) / dp;
      slope_[j][c] = limiters::eval(spec, params, theta) * dp / esize_[j];
    }
  }

  out.resize(m + 1);
  for (int f = 0; f <= m; ++f) {
    const int jl = f + 1, jr = f + 2;
    Vars vl, vr;
    for (int c = 0; c < ncomp; ++c) {
      vl[c] = evars_[jl][c] + 0.5 * slope_[jl][c] * esize_[jl];
      vr[c] = evars_[jr][c] - 0.5 * slope_[jr][c] * esize_[jr];
    }
    if (primitive) {
      euler::Prim<Dim> ql, qr;
      ql.rho = vl[0];
      qr.rho = vr[0];
      for (int d = 0; d < Dim; ++d) {
        ql.vel[d] = vl[1 + d];
        qr.vel[d] = vr[1 + d];
      }
      ql.p = vl[ncomp - 1];
      qr.p = vr[ncomp - 1];
      out[f].left = euler::prim_to_cons(ql, scheme_.gas);
      out[f].right = euler::prim_to_cons(qr, scheme_.gas);
    } else {
      for (int c = 0; c < ncomp; ++c) {
        out[f].left.c[c] = vl[c];
        out[f].right.c[c] = vr[c];
      }
    }
  }
}

template <int Dim>
void SegmentSweeper<Dim>::fluxes(std::span<const double> sizes,
                                 std::span<const euler::Cons<Dim>> states, int axis,
                                 double face_lo, double transverse, double t,
                                 const SideBC<Dim>& lo, const SideBC<Dim>& hi,
                                 std::vector<euler::Cons<Dim>>& out) {
  face_states(sizes, states, axis, face_lo, transverse, t, lo, hi, faces_);
  out.resize(faces_.size());
  for (size_t f = 0; f < faces_.size(); ++f)
    out[f] =
        euler::roe_flux(faces_[f].left, faces_[f].right, scheme_.gas, axis, scheme_.entropy_fix);
}

template class SegmentSweeper<1>;
template class SegmentSweeper<2>;

void residual(const Field1D& field, const SchemeConfig& scheme, const SideBC<1>& left,
              const SideBC<1>& right, double t, std::vector<euler::Cons<1>>& dudt) {
  const int n = field.grid.n();
  dudt.assign(n, euler::Cons<1>{});
  SegmentSweeper<1> sweeper(scheme);
  std::vector<euler::Cons<1>> flux;
  try {
    sweeper.fluxes(field.grid.sizes, field.u, 0, field.grid.a(), 0.0, t, left, right, flux);
  } catch (const euler::NonPhysicalState& e) {
    throw euler::NonPhysicalState(std::string(e.what()) + " [1d residual at t=" +
                                  std::to_string(t) + "]");
  }
  for (int i = 0; i < n; ++i) {
    dudt[i] = flux[i] - flux[i + 1];
    dudt[i] *= 1.0 / field.grid.sizes[i];
  }
}

void residual(const Field2D& field, const SchemeConfig& scheme, const BoundarySpec2D& bcs,
              double t, std::vector<euler::Cons<2>>& dudt) {
  const int nx = field.nx(), ny = field.ny();
  dudt.assign(static_cast<size_t>(nx) * ny, euler::Cons<2>{});
  SegmentSweeper<2> sweeper(scheme);
  std::vector<euler::Cons<2>> flux;
  std::vector<euler::Cons<2>> run_states;
  std::vector<double> run_sizes;
  const SideBC<2> wall = wall_bc<2>();

  // x sweeps, row by row.
  for (int j = 0; j < ny; ++j) {
    const double y = field.grid.y.centers[j];
    int i = 0;
    while (i < nx) {
      if (!field.is_active(i, j)) {
        ++i;
        continue;
      }
      int end = i;
      while (end < nx && field.is_active(end, j)) ++end;
      const int m = end - i;
      run_states.assign(field.u.begin() + field.idx(i, j), field.u.begin() + field.idx(end, j));
      run_sizes.assign(field.grid.x.sizes.begin() + i, field.grid.x.sizes.begin() + end);
      const SideBC<2> lo = (i == 0) ? bcs.xlo(y) : wall;
      const SideBC<2> hi = (end == nx) ? bcs.xhi(y) : wall;
      sweeper.fluxes(run_sizes, run_states, 0, field.grid.x.faces[i], y, t, lo, hi, flux);
      for (int q = 0; q < m; ++q) {
        euler::Cons<2> d = flux[q] - flux[q + 1];
        d *= 1.0 / field.grid.x.sizes[i + q];
        dudt[field.idx(i + q, j)] += d;
      }
      i = end;
    }
  }

  // y sweeps, column by column.
  for (int i = 0; i < nx; ++i) {
    const double x = field.grid.x.centers[i];
    int j = 0;
    while (j < ny) {
      if (!field.is_active(i, j)) {
        ++j;
        continue;
      }
      int end = j;
      while (end < ny && field.is_active(i, end)) ++end;
      const int m = end - j;
      run_states.resize(m);
      for (int q = 0; q < m; ++q) run_states[q] = field.u[field.idx(i, j + q)];
      run_sizes.assign(field.grid.y.sizes.begin() + j, field.grid.y.sizes.begin() + end);
      const SideBC<2> lo = (j == 0) ? bcs.ylo(x) : wall;
      const SideBC<2> hi = (end == ny) ? bcs.yhi(x) : wall;
      sweeper.fluxes(run_sizes, run_states, 1, field.grid.y.faces[j], x, t, lo, hi, flux);
      for (int q = 0; q < m; ++q) {
        euler::Cons<2> d = flux[q] - flux[q + 1];
        d *= 1.0 / field.grid.y.sizes[j + q];
        dudt[field.idx(i, j + q)] += d;
      }
      j = end;
    }
  }
}

double stable_dt(const Field1D& field, const SchemeConfig& scheme, const TimeControls& controls) {
  double smax = 0.0;
  for (const auto& w : field.u) smax = std::max(smax, euler::max_wave_speed(w, scheme.gas));
  if (smax <= 0.0) throw std::runtime_error("stable_dt: zero wave speed");
  return controls.cfl * field.grid.reference_size / smax;
}

double stable_dt(const Field2D& field, const SchemeConfig& scheme, const TimeControls& controls) {
  const double hx = field.grid.x.reference_size;
  const double hy = field.grid.y.reference_size;
  double rate = 0.0;
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      if (!field.is_active(i, j)) continue;
      const auto& w = field.u[field.idx(i, j)];
      const double sx = euler::max_wave_speed_axis(w, scheme.gas, 0);
      const double sy = euler::max_wave_speed_axis(w, scheme.gas, 1);
      rate = std::max(rate, sx / hx + sy / hy);
    }
  if (rate <= 0.0) throw std::runtime_error("stable_dt: zero wave speed");
  return controls.cfl / rate;
}

void check_physical(const Field1D& field, const euler::GasModel& gas, double t) {
  for (int i = 0; i < field.grid.n(); ++i) {
    try {
      euler::cons_to_prim(field.u[i], gas);
    } catch (const euler::NonPhysicalState& e) {
      throw euler::NonPhysicalState(std::string(e.what()) + " [cell i=" + std::to_string(i) +
                                    ", t=" + std::to_string(t) + "]");
    }
  }
}

void check_physical(const Field2D& field, const euler::GasModel& gas, double t) {
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      if (!field.is_active(i, j)) continue;
      try {
        euler::cons_to_prim(field.u[field.idx(i, j)], gas);
      } catch (const euler::NonPhysicalState& e) {
        throw euler::NonPhysicalState(std::string(e.what()) + " [cell i=" + std::to_string(i) +
                                      ", j=" + std::to_string(j) + ", t=" + std::to_string(t) +
                                      "]");
      }
    }
}

void advance_tvd_rk2(Field1D& field, const SchemeConfig& scheme, const SideBC<1>& left,
                     const SideBC<1>& right, double t, double dt) {
  const int n = field.grid.n();
  std::vector<euler::Cons<1>> rhs;
  residual(field, scheme, left, right, t, rhs);
  Field1D stage = field;
  for (int i = 0; i < n; ++i) stage.u[i] += dt * rhs[i];
  check_physical(stage, scheme.gas, t + dt);
  residual(stage, scheme, left, right, t + dt, rhs);
  for (int i = 0; i < n; ++i) {
    stage.u[i] += dt * rhs[i];
    field.u[i] = 0.5 * (field.u[i] + stage.u[i]);
  }
  check_physical(field, scheme.gas, t + dt);
}

void advance_tvd_rk2(Field2D& field, const SchemeConfig& scheme, const BoundarySpec2D& bcs,
                     double t, double dt) {
  std::vector<euler::Cons<2>> rhs;
  residual(field, scheme, bcs, t, rhs);
  Field2D stage = field;
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      if (!field.is_active(i, j)) continue;
      stage.u[field.idx(i, j)] += dt * rhs[field.idx(i, j)];
    }
  check_physical(stage, scheme.gas, t + dt);
  residual(stage, scheme, bcs, t + dt, rhs);
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      if (!field.is_active(i, j)) continue;
      const int k = field.idx(i, j);
      stage.u[k] += dt * rhs[k];
      field.u[k] = 0.5 * (field.u[k] + stage.u[k]);
    }
  check_physical(field, scheme.gas, t + dt);
}

}  // namespace nufv::solver
