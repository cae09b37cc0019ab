#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nufv::euler {

struct GasModel {
  double gamma = 1.4;
};

struct NonPhysicalState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Conserved variables (rho, momentum..., total energy per volume).
template <int Dim>
struct Cons {
  static constexpr int ncomp = Dim + 2;
  std::array<double, ncomp> c{};

  double rho() const { return c[0]; }
  double mom(int d) const { return c[1 + d]; }
  double energy() const { return c[ncomp - 1]; }
  double& rho() { return c[0]; }
  double& mom(int d) { return c[1 + d]; }
  double& energy() { return c[ncomp - 1]; }

  Cons& operator+=(const Cons& o) {
    for (int m = 0; m < ncomp; ++m) c[m] += o.c[m];
    return *this;
  }
  Cons& operator-=(const Cons& o) {
    for (int m = 0; m < ncomp; ++m) c[m] -= o.c[m];
    return *this;
  }
  Cons& operator*=(double s) {
    for (int m = 0; m < ncomp; ++m) c[m] *= s;
    return *this;
  }
  friend Cons operator+(Cons a, const Cons& b) { return a += b; }
  friend Cons operator-(Cons a, const Cons& b) { return a -= b; }
  friend Cons operator*(double s, Cons a) { return a *= s; }
};

template <int Dim>
struct Prim {
  double rho = 0.0;
  std::array<double, Dim> vel{};
  double p = 0.0;
};

template <int Dim>
Cons<Dim> prim_to_cons(const Prim<Dim>& q, const GasModel& gas) {
  Cons<Dim> w;
  w.rho() = q.rho;
  double ke = 0.0;
  for (int d = 0; d < Dim; ++d) {
    w.mom(d) = q.rho * q.vel[d];
    ke += q.vel[d] * q.vel[d];
  }
  w.energy() = q.p / (gas.gamma - 1.0) + 0.5 * q.rho * ke;
  return w;
}

template <int Dim>
Prim<Dim> cons_to_prim(const Cons<Dim>& w, const GasModel& gas) {
  if (!(w.rho() > 0.0))
    throw NonPhysicalState("non-physical state: rho = " + std::to_string(w.rho()));
  Prim<Dim> q;
  q.rho = w.rho();
  double ke = 0.0;
  for (int d = 0; d < Dim; ++d) {
    q.vel[d] = w.mom(d) / w.rho();
    ke += q.vel[d] * q.vel[d];
  }
  q.p = (gas.gamma - 1.0) * (w.energy() - 0.5 * w.rho() * ke);
  if (!(q.p > 0.0))
    throw NonPhysicalState("non-physical state: p = " + std::to_string(q.p) +
                           " (rho = " + std::to_string(q.rho) + ")");
  return q;
}

template <int Dim>
double sound_speed(const Prim<Dim>& q, const GasModel& gas) {
  return std::sqrt(gas.gamma * q.p / q.rho);
}

/// |u_axis| + c.
template <int Dim>
double max_wave_speed_axis(const Cons<Dim>& w, const GasModel& gas, int axis) {
  const Prim<Dim> q = cons_to_prim(w, gas);
  return std::abs(q.vel[axis]) + sound_speed(q, gas);
}

/// |u| + c with the velocity magnitude.
template <int Dim>
double max_wave_speed(const Cons<Dim>& w, const GasModel& gas) {
  const Prim<Dim> q = cons_to_prim(w, gas);
  double v2 = 0.0;
  for (int d = 0; d < Dim; ++d) v2 += q.vel[d] * q.vel[d];
  return std::sqrt(v2) + sound_speed(q, gas);
}

template <int Dim>
Cons<Dim> physical_flux(const Cons<Dim>& w, const GasModel& gas, int axis) {
  const Prim<Dim> q = cons_to_prim(w, gas);
  const double un = q.vel[axis];
  Cons<Dim> f;
  f.rho() = w.mom(axis);
  for (int d = 0; d < Dim; ++d) f.mom(d) = w.mom(d) * un;
  f.mom(axis) += q.p;
  f.energy() = un * (w.energy() + q.p);
  return f;
}

/// Harten-Hyman eigenvalue smoothing, threshold factor * (|u_roe| + a_roe),
/// applied to the acoustic waves (all waves when all_waves is set). The
/// paper never specifies a fix; this one is switchable off to recover raw
/// Roe.
struct EntropyFix {
  bool enabled = true;
  double factor = 0.3;
  bool all_waves = false;
};

/// Roe-average wave decomposition of the jump wr - wl along one axis:
/// acoustic waves (indices 0 and 2), the entropy wave (1) and, in 2D, one
/// shear wave per transverse direction.
template <int Dim>
struct RoeWaves {
  static constexpr int nwave = Dim + 2;
  std::array<double, nwave> strength{};
  std::array<double, nwave> speed{};
  std::array<Cons<Dim>, nwave> vector{};
  double u_normal = 0.0;
  double sound = 0.0;
};

template <int Dim>
RoeWaves<Dim> roe_waves(const Cons<Dim>& wl, const Cons<Dim>& wr, const GasModel& gas,
                        int axis) {
  const Prim<Dim> l = cons_to_prim(wl, gas);
  const Prim<Dim> r = cons_to_prim(wr, gas);
  const double hl = (wl.energy() + l.p) / l.rho;
  const double hr = (wr.energy() + r.p) / r.rho;

  const double rt = std::sqrt(r.rho / l.rho);
  std::array<double, Dim> v;
  double q2 = 0.0;
  for (int d = 0; d < Dim; ++d) {
    v[d] = (l.vel[d] + rt * r.vel[d]) / (1.0 + rt);
    q2 += v[d] * v[d];
  }
  const double h = (hl + rt * hr) / (1.0 + rt);
  const double a2 = (gas.gamma - 1.0) * (h - 0.5 * q2);
  if (!(a2 > 0.0)) throw NonPhysicalState("roe_waves: negative averaged sound speed");
  const double a = std::sqrt(a2);
  const double un = v[axis];
  const double rho = std::sqrt(l.rho * r.rho);

  const double dp = r.p - l.p;
  const double dun = r.vel[axis] - l.vel[axis];
  const double drho = r.rho - l.rho;

  RoeWaves<Dim> w;
  w.u_normal = un;
  w.sound = a;
  w.strength[0] = (dp - rho * a * dun) / (2.0 * a2);
  w.strength[1] = drho - dp / a2;
  w.strength[2] = (dp + rho * a * dun) / (2.0 * a2);
  w.speed = {un - a, un, un + a};

  for (int k : {0, 2}) {
    w.vector[k].rho() = 1.0;
    for (int d = 0; d < Dim; ++d) w.vector[k].mom(d) = v[d];
    w.vector[k].mom(axis) += (k == 0 ? -a : a);
    w.vector[k].energy() = h + (k == 0 ? -un * a : un * a);
  }
  w.vector[1].rho() = 1.0;
  for (int d = 0; d < Dim; ++d) w.vector[1].mom(d) = v[d];
  w.vector[1].energy() = 0.5 * q2;

  int slot = 3;
  for (int d = 0; d < Dim; ++d) {
    if (d == axis) continue;
    w.strength[slot] = rho * (r.vel[d] - l.vel[d]);
    w.speed[slot] = un;
    w.vector[slot].mom(d) = 1.0;
    w.vector[slot].energy() = v[d];
    ++slot;
  }
  return w;
}

/// sum_k alpha_k lambda_k r_k with signed speeds; by the Roe property this
/// equals f(wr) - f(wl).
template <int Dim>
Cons<Dim> roe_matrix_action(const Cons<Dim>& wl, const Cons<Dim>& wr, const GasModel& gas,
                            int axis) {
  const RoeWaves<Dim> w = roe_waves(wl, wr, gas, axis);
  Cons<Dim> out;
  for (int k = 0; k < RoeWaves<Dim>::nwave; ++k)
    out += (w.strength[k] * w.speed[k]) * w.vector[k];
  return out;
}

template <int Dim>
Cons<Dim> roe_flux(const Cons<Dim>& wl, const Cons<Dim>& wr, const GasModel& gas, int axis,
                   const EntropyFix& fix = {}) {
  const RoeWaves<Dim> w = roe_waves(wl, wr, gas, axis);
  std::array<double, RoeWaves<Dim>::nwave> abs_speed;
  for (int k = 0; k < RoeWaves<Dim>::nwave; ++k) abs_speed[k] = std::abs(w.speed[k]);
  if (fix.enabled) {
    const double eps = fix.factor * (std::abs(w.u_normal) + w.sound);
    const int last = fix.all_waves ? RoeWaves<Dim>::nwave : 3;
    for (int k = 0; k < last; ++k) {
      if (!fix.all_waves && k == 1) continue;
      if (abs_speed[k] < eps) abs_speed[k] = (w.speed[k] * w.speed[k] + eps * eps) / (2.0 * eps);
    }
  }

  Cons<Dim> diss;
  for (int k = 0; k < RoeWaves<Dim>::nwave; ++k)
    diss += (w.strength[k] * abs_speed[k]) * w.vector[k];

  Cons<Dim> f = physical_flux(wl, gas, axis) + physical_flux(wr, gas, axis);
  f *= 0.5;
  diss *= 0.5;
  f -= diss;
  return f;
}

}  // namespace nufv::euler
