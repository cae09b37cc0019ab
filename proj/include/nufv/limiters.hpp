#pragma once

#include <cstdint>
#include <string>

namespace nufv::limiters {

enum class Family {
  None,  // phi == 0: first-order scheme
  Minmod,
  Superbee,
  MC,
  VanLeer,
  VanAlbada,
  Berger1,
  Berger2,
};

enum class Flavor { Conventional, Enhanced };

struct LimiterSpec {
  Family family = Family::VanAlbada;
  Flavor flavor = Flavor::Enhanced;
};

/// Per-cell parameters of an enhanced limiter. Admissible when
/// 0 < B < min(2, 2A); k is only consulted by the van Leer / van Albada
/// families (k = 1 everywhere else).
struct LimiterParams {
  double A = 1.0;
  double B = 1.0;
  long long k = 1;
};

bool admissible(double A, double B);

/// Smallest k >= 1 with B <= 2(A^k+...+A)/(A^k+...+A+1).
long long select_k_van_leer(double A, double B);

/// Smallest k >= 1 with B <= 2(1+1/k)^{-1} min(1,A). This cheap bound
/// implies the exact one with (k-1)^{k-1}/k^k.
long long select_k_van_albada(double A, double B);

/// Validates admissibility and runs the family's k-selection.
LimiterParams make_params(Family family, double A, double B);

/// Conjugate parameter map (A,B) -> (1/A, B/A), k re-selected.
LimiterParams conjugate(Family family, const LimiterParams& params);

double eval_conventional(Family family, double theta);
double eval_enhanced(Family family, const LimiterParams& params, double theta);
double eval(const LimiterSpec& spec, const LimiterParams& params, double theta);

/// Edges of the generalized Sweby region at a given theta. For theta <= 0
/// both bounds are 0; for theta > 0 the limiter band is
/// [min(B, B theta/A), min(2, 2 theta, max(B, B theta/A))].
struct SwebyBounds {
  double lower = 0.0;
  double upper = 0.0;
};
SwebyBounds sweby_bounds(double A, double B, double theta);

/// Whether a conventional van Leer limiter driven by any alternative
/// monitor of the admissible form can satisfy both the TVD box and the
/// order condition at (A,B): possible iff 2A/B >= 1 + A.
bool alt_monitor_feasible(double A, double B);

/// Alternative-monitor construction theta_alt = alpha*theta^p with slope
/// scaling beta*theta^q; its equivalent limiter is
/// beta*theta^q * phi_vanleer(alpha*theta^p).
struct AltMonitorCase {
  double alpha = 1.0;
  double beta = 1.0;
  int p = 1;  // in {-1, +1}
  int q = 0;  // in {0, 1}
};
double alt_monitor_equivalent_limiter(const AltMonitorCase& c, double theta);

Family family_from_name(const std::string& name);
std::string family_name(Family family);
Flavor flavor_from_name(const std::string& name);
std::string flavor_name(Flavor flavor);

}  // namespace nufv::limiters
