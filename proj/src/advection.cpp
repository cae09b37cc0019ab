#include "nufv/advection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nufv::advection {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

limiters::LimiterParams params_at(const limiters::LimiterSpec& spec, const mesh::Grid1D& g,
                                  int i) {
  if (spec.flavor == limiters::Flavor::Conventional || spec.family == limiters::Family::None)
    return {};
  const int n = g.n();
  const auto [A, B] =
      mesh::cell_params(g.sizes[wrap(i - 1, n)], g.sizes[i], g.sizes[wrap(i + 1, n)]);
  return limiters::make_params(spec.family, A, B);
}

/// phi value used inside sigma_i; zero when the forward difference vanishes.
double phi_at(const limiters::LimiterSpec& spec, const mesh::Grid1D& g, std::span<const double> u,
              int i) {
  const int n = g.n();
  const double dp = u[wrap(i + 1, n)] - u[i];
  if (dp == 0.0) return 0.0;
  const double theta = (u[i] - u[wrap(i - 1, n)]) / dp;
  return limiters::eval(spec, params_at(spec, g, i), theta);
}

void check_state(const RepState& state) {
  if (state.grid == nullptr) throw std::invalid_argument("rep: grid not set");
  if (static_cast<int>(state.u.size()) != state.grid->n())
    throw std::invalid_argument("rep: data length does not match grid");
}

}  // namespace

std::vector<double> courant_numbers(const RepState& state) {
  check_state(state);
  const auto& g = *state.grid;
  std::vector<double> lam(g.n());
  for (int i = 0; i < g.n(); ++i) lam[i] = std::abs(state.c) * state.dt / g.sizes[i];
  return lam;
}

std::vector<double> limited_slopes(const RepState& state, const limiters::LimiterSpec& spec) {
  check_state(state);
  const auto& g = *state.grid;
  const int n = g.n();
  std::vector<double> sigma(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double dp = state.u[wrap(i + 1, n)] - state.u[i];
    if (dp == 0.0) continue;
    sigma[i] = phi_at(spec, g, state.u, i) * dp / g.sizes[i];
  }
  return sigma;
}

double limited_slope_local(const limiters::LimiterSpec& spec, double dx_left, double dx_mid,
                           double dx_right, double u_left, double u_mid, double u_right) {
  const double dp = u_right - u_mid;
  if (dp == 0.0) return 0.0;
  const double theta = (u_mid - u_left) / dp;
  limiters::LimiterParams p;
  if (spec.flavor == limiters::Flavor::Enhanced && spec.family != limiters::Family::None) {
    const auto [A, B] = mesh::cell_params(dx_left, dx_mid, dx_right);
    p = limiters::make_params(spec.family, A, B);
  }
  return limiters::eval(spec, p, theta) * dp / dx_mid;
}

double total_variation_periodic(std::span<const double> u) {
  const int n = static_cast<int>(u.size());
  double tv = 0.0;
  for (int i = 0; i < n; ++i) tv += std::abs(u[wrap(i + 1, n)] - u[i]);
  return tv;
}

RepResult rep_step(const RepState& state, std::span<const double> sigma) {
  check_state(state);
  const auto& g = *state.grid;
  const int n = g.n();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("rep_step: slope length does not match grid");

  const std::vector<double> lam = courant_numbers(state);
  for (int i = 0; i < n; ++i)
    if (lam[i] < 0.0 || lam[i] > 1.0 + 1e-14)
      throw std::invalid_argument("rep_step: local Courant number outside [0, 1]");

  RepResult out;
  out.u_next.resize(n);
  out.diag.tv_before = total_variation_periodic(state.u);
  out.diag.flux_limiter.resize(n);
  out.diag.face_B.resize(n);

  const int sign = state.c > 0.0 ? 1 : (state.c < 0.0 ? -1 : 0);
  const auto& u = state.u;

  for (int i = 0; i < n; ++i) {
    const int im = wrap(i - 1, n), ip = wrap(i + 1, n);
    if (sign >= 0) {
      out.u_next[i] = u[i] - lam[i] * (u[i] - u[im]) -
                      0.5 * lam[i] *
                          ((1.0 - lam[i]) * g.sizes[i] * sigma[i] -
                           (1.0 - lam[im]) * g.sizes[im] * sigma[im]);
    } else {
      out.u_next[i] = u[i] - lam[i] * (u[i] - u[ip]) +
                      0.5 * lam[i] *
                          ((1.0 - lam[i]) * g.sizes[i] * sigma[i] -
                           (1.0 - lam[ip]) * g.sizes[ip] * sigma[ip]);
    }
  }

  // Harten coefficients. phi values are recovered from the slopes; a zero
  // data difference makes the coefficient irrelevant, so the neutral value
  // lambda_i (inside [0,1]) is recorded.
  if (sign >= 0) {
    out.diag.coeff_C.resize(n);
    for (int i = 0; i < n; ++i) {
      const int im = wrap(i - 1, n);
      const double dm = u[i] - u[im];
      double coeff = lam[i];
      if (dm != 0.0) {
        const double ratio = sigma[i] * g.sizes[i] / dm;  // phi_i / theta_i
        const double phi_prev = sigma[im] * g.sizes[im] / dm;
        coeff += 0.5 * lam[i] * (1.0 - lam[i]) * ratio -
                 0.5 * lam[i] * (1.0 - lam[im]) * phi_prev;
      }
      out.diag.coeff_C[i] = coeff;
    }
  } else {
    out.diag.coeff_D.resize(n);
    for (int i = 0; i < n; ++i) {
      const int ip = wrap(i + 1, n);
      const double dp = u[ip] - u[i];
      double coeff = lam[i];
      if (dp != 0.0) {
        const double phi_here = sigma[i] * g.sizes[i] / dp;
        const double ratio_next = sigma[ip] * g.sizes[ip] / dp;  // phi_{i+1}/theta_{i+1}
        coeff += 0.5 * lam[i] * (1.0 - lam[i]) * phi_here -
                 0.5 * lam[i] * (1.0 - lam[ip]) * ratio_next;
      }
      out.diag.coeff_D[i] = coeff;
    }
  }

  for (int f = 0; f < n; ++f) {  // face f sits between cells f and f+1
    out.diag.face_B[f] = face_coefficient_B(g, f, sign >= 0 ? 1 : -1);
    const int donor = sign >= 0 ? f : wrap(f + 1, n);
    const double dp = u[wrap(donor + 1, n)] - u[donor];
    const double phi = dp == 0.0 ? 0.0 : sigma[donor] * g.sizes[donor] / dp;
    out.diag.flux_limiter[f] = equivalent_flux_limiter(g, phi, donor, sign >= 0 ? 1 : -1);
  }

  out.diag.tv_after = total_variation_periodic(out.u_next);
  return out;
}

std::vector<double> flux_form_update(const RepState& state, std::span<const double> sigma) {
  check_state(state);
  const auto& g = *state.grid;
  const int n = g.n();
  const std::vector<double> lam = courant_numbers(state);
  const auto& u = state.u;
  const double c = state.c;

  // F[f] approximates the flux at the face between cells f and f+1.
  std::vector<double> flux(n);
  for (int f = 0; f < n; ++f) {
    if (c >= 0.0) {
      flux[f] = c * u[f] + 0.5 * c * (1.0 - lam[f]) * g.sizes[f] * sigma[f];
    } else {
      const int ip = wrap(f + 1, n);
      flux[f] = c * u[ip] - 0.5 * c * (1.0 - lam[ip]) * g.sizes[ip] * sigma[ip];
    }
  }
  std::vector<double> next(n);
  for (int i = 0; i < n; ++i) {
    const int fm = wrap(i - 1, n);
    next[i] = u[i] - state.dt / g.sizes[i] * (flux[i] - flux[fm]);
  }
  return next;
}

double face_coefficient_B(const mesh::Grid1D& grid, int face, int sign_of_c) {
  const int n = grid.n();
  if (sign_of_c >= 0) {
    const double di = grid.sizes[wrap(face, n)];
    const double dp = grid.sizes[wrap(face + 1, n)];
    return 2.0 * di / (di + dp);
  }
  const double dp = grid.sizes[wrap(face + 1, n)];
  const double dpp = grid.sizes[wrap(face + 2, n)];
  return 2.0 * dp / (dp + dpp);
}

double equivalent_flux_limiter(const mesh::Grid1D& grid, double phi_value, int i, int sign_of_c) {
  // i is the donor cell: it feeds face i+1/2 when c>0 and face i-1/2 when
  // c<0. In donor indexing both signs reduce to phi / B_face.
  (void)sign_of_c;
  const int n = grid.n();
  const double di = grid.sizes[wrap(i, n)];
  const double dp = grid.sizes[wrap(i + 1, n)];
  return (di + dp) / (2.0 * di) * phi_value;
}

double symmetry_pair_check(const RepState& state, const limiters::LimiterSpec& spec) {
  check_state(state);
  const auto& g = *state.grid;
  const int n = g.n();

  const auto sigma_u = limited_slopes(state, spec);
  const auto step_u = rep_step(state, sigma_u);

  // Mirrored problem: reversed cell sizes, reversed data, negated speed.
  std::vector<double> rev_faces(n + 1);
  rev_faces[0] = g.faces.front();
  for (int i = 0; i < n; ++i) rev_faces[i + 1] = rev_faces[i] + g.sizes[n - 1 - i];
  RepState mirror;
  const mesh::Grid1D rg = mesh::Grid1D::from_faces(std::move(rev_faces));
  mirror.grid = &rg;
  mirror.c = -state.c;
  mirror.dt = state.dt;
  mirror.u.resize(n);
  for (int i = 0; i < n; ++i) mirror.u[i] = state.u[n - 1 - i];

  const auto sigma_v = limited_slopes(mirror, spec);
  const auto step_v = rep_step(mirror, sigma_v);

  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    defect = std::max(defect, std::abs(step_v.u_next[i] - step_u.u_next[n - 1 - i]));
  return defect;
}

}  // namespace nufv::advection
