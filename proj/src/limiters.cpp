#include "nufv/limiters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nufv::limiters {

namespace {

constexpr long long kMaxK = 2'000'000;

// S_k(x)/(S_k(x)+1) with S_k(x) = x^k + ... + x. The x > 1 branch divides
// through by x^{k+1} so large k never overflows.
double geom_ratio(double x, long long k) {
  const double kk = static_cast<double>(k);
  if (x == 1.0) return kk / (kk + 1.0);
  if (x < 1.0) {
    const double s = x * (1.0 - std::pow(x, kk)) / (1.0 - x);
    return s / (s + 1.0);
  }
  return (1.0 - std::pow(x, -kk)) / (1.0 - std::pow(x, -(kk + 1.0)));
}

double conventional_van_leer(double theta) {
  if (!(theta > 0.0)) return 0.0;
  return 2.0 * theta / (1.0 + theta);
}

double enhanced_van_leer(double A, double B, long long k, double theta) {
  if (!(theta > 0.0)) return 0.0;
  return B * geom_ratio(theta, k) / geom_ratio(A, k);
}

double enhanced_van_albada(double A, double B, long long k, double theta) {
  if (!(theta > 0.0)) return 0.0;
  if (theta <= 1.0) {
    const double tk = std::pow(theta, static_cast<double>(k));
    return B * (tk + theta) / (tk + A);
  }
  // Divide numerator and denominator by theta^k.
  const double tmk = std::pow(theta, -static_cast<double>(k));
  const double t1mk = std::pow(theta, 1.0 - static_cast<double>(k));
  return B * (1.0 + t1mk) / (1.0 + A * tmk);
}

double berger1(double A, double B, double theta) {
  if (!(theta > 0.0)) return 0.0;
  if (theta <= A) {
    // base == 1 exactly at theta == A, so both branches meet at phi = B.
    const double base = (theta * (A + 1.0)) / ((theta + 1.0) * A);
    const double e = B / (2.0 * A - B);
    return 2.0 * theta * (1.0 - (1.0 - B / (2.0 * A)) * std::pow(base, e));
  }
  const double base = (A + 1.0) / (theta + 1.0);
  const double e = B / (2.0 - B);
  return 2.0 * (1.0 - (1.0 - 0.5 * B) * std::pow(base, e));
}

double berger2(double A, double B, double theta) {
  if (!(theta > 0.0)) return 0.0;
  const double front = B * (theta + 1.0) / (A + 1.0);
  if (theta <= A) {
    const double base = std::max(0.0, 1.0 - (theta * (A + 1.0)) / ((theta + 1.0) * A));
    return front * (1.0 - std::pow(base, 2.0 * A / B));
  }
  const double base = std::max(0.0, 1.0 - (A + 1.0) / (theta + 1.0));
  return front * (1.0 - std::pow(base, 2.0 / B));
}

}  // namespace

bool admissible(double A, double B) {
  return std::isfinite(A) && std::isfinite(B) && A > 0.0 && B > 0.0 &&
         B < std::min(2.0, 2.0 * A);
}

long long select_k_van_leer(double A, double B) {
  for (long long k = 1; k <= kMaxK; ++k) {
    if (B <= 2.0 * geom_ratio(A, k)) return k;
  }
  throw std::runtime_error("select_k_van_leer: no admissible k found");
}

long long select_k_van_albada(double A, double B) {
  const double m = std::min(1.0, A);
  for (long long k = 1; k <= kMaxK; ++k) {
    const double kk = static_cast<double>(k);
    if (B <= 2.0 * m * kk / (kk + 1.0)) return k;
  }
  throw std::runtime_error("select_k_van_albada: no admissible k found");
}

LimiterParams make_params(Family family, double A, double B) {
  if (!admissible(A, B))
    throw std::invalid_argument("limiter params (A,B) violate 0 < B < min(2, 2A)");
  LimiterParams p{A, B, 1};
  if (family == Family::VanLeer) p.k = select_k_van_leer(A, B);
  if (family == Family::VanAlbada) p.k = select_k_van_albada(A, B);
  return p;
}

LimiterParams conjugate(Family family, const LimiterParams& params) {
  return make_params(family, 1.0 / params.A, params.B / params.A);
}

double eval_conventional(Family family, double theta) {
  if (!std::isfinite(theta)) return 0.0;
  switch (family) {
    case Family::None:
      return 0.0;
    case Family::Minmod:
      return std::max(0.0, std::min(theta, 1.0));
    case Family::Superbee:
      return std::max({0.0, std::min(2.0 * theta, 1.0), std::min(theta, 2.0)});
    case Family::MC:
      return std::max(0.0, std::min({2.0 * theta, 0.5 * (1.0 + theta), 2.0}));
    case Family::VanLeer:
      return conventional_van_leer(theta);
    case Family::VanAlbada:
      // (theta + theta^2)/(1 + theta^2), clamped to 0 for theta <= 0 to
      // stay inside the TVD box.
      if (!(theta > 0.0)) return 0.0;
      return (theta + theta * theta) / (1.0 + theta * theta);
    case Family::Berger1:
      return berger1(1.0, 1.0, theta);
    case Family::Berger2:
      return berger2(1.0, 1.0, theta);
  }
  return 0.0;
}

double eval_enhanced(Family family, const LimiterParams& p, double theta) {
  if (!std::isfinite(theta) || !(theta > 0.0)) return 0.0;
  switch (family) {
    case Family::None:
      return 0.0;
    case Family::Minmod:
      return std::max(0.0, (p.B / p.A) * std::min(theta, p.A));
    case Family::Superbee:
      return std::max({0.0, std::min(2.0 * theta, p.B), std::min(p.B * theta / p.A, 2.0)});
    case Family::MC:
      return std::max(0.0, std::min({2.0 * theta, p.B * (theta + 1.0) / (p.A + 1.0), 2.0}));
    case Family::VanLeer:
      return enhanced_van_leer(p.A, p.B, p.k, theta);
    case Family::VanAlbada:
      return enhanced_van_albada(p.A, p.B, p.k, theta);
    case Family::Berger1:
      return berger1(p.A, p.B, theta);
    case Family::Berger2:
      return berger2(p.A, p.B, theta);
  }
  return 0.0;
}

double eval(const LimiterSpec& spec, const LimiterParams& params, double theta) {
  if (spec.family == Family::None) return 0.0;
  if (spec.flavor == Flavor::Conventional) return eval_conventional(spec.family, theta);
  return eval_enhanced(spec.family, params, theta);
}

SwebyBounds sweby_bounds(double A, double B, double theta) {
  if (!(theta > 0.0)) return {0.0, 0.0};
  const double lw = B;              // generalized Lax-Wendroff edge
  const double bw = B * theta / A;  // generalized Beam-Warming edge
  SwebyBounds out;
  out.lower = std::min(lw, bw);
  out.upper = std::min({2.0, 2.0 * theta, std::max(lw, bw)});
  return out;
}

bool alt_monitor_feasible(double A, double B) {
  return 2.0 * A / B >= 1.0 + A;
}

double alt_monitor_equivalent_limiter(const AltMonitorCase& c, double theta) {
  if (!(theta > 0.0)) return 0.0;
  const double monitor = c.alpha * std::pow(theta, static_cast<double>(c.p));
  return c.beta * std::pow(theta, static_cast<double>(c.q)) * conventional_van_leer(monitor);
}

Family family_from_name(const std::string& name) {
  if (name == "none") return Family::None;
  if (name == "minmod") return Family::Minmod;
  if (name == "superbee") return Family::Superbee;
  if (name == "mc") return Family::MC;
  if (name == "van_leer") return Family::VanLeer;
  if (name == "van_albada") return Family::VanAlbada;
  if (name == "berger1") return Family::Berger1;
  if (name == "berger2") return Family::Berger2;
  throw std::invalid_argument("unknown limiter '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::None: return "none";
    case Family::Minmod: return "minmod";
    case Family::Superbee: return "superbee";
    case Family::MC: return "mc";
    case Family::VanLeer: return "van_leer";
    case Family::VanAlbada: return "van_albada";
    case Family::Berger1: return "berger1";
    case Family::Berger2: return "berger2";
  }
  return "?";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "conventional") return Flavor::Conventional;
  if (name == "enhanced") return Flavor::Enhanced;
  throw std::invalid_argument("unknown limiter flavor '" + name + "'");
}

std::string flavor_name(Flavor flavor) {
  return flavor == Flavor::Conventional ? "conventional" : "enhanced";
}

}  // namespace nufv::limiters
