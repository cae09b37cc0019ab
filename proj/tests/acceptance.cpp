// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Default mode runs the CI-sized 2D ladders; --full switches criteria 7 and
// 9 to the paper-sized meshes (several extra minutes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "nufv/advection.hpp"
#include "nufv/analysis.hpp"
#include "nufv/limiters.hpp"
#include "nufv/mesh.hpp"
#include "nufv/problems.hpp"
#include "nufv/rng.hpp"
#include "nufv/runner.hpp"

using namespace nufv;
using limiters::Family;
using limiters::Flavor;
using limiters::LimiterSpec;

namespace {

int g_failures = 0;

const Family kEnhanced[] = {Family::Minmod,    Family::Superbee, Family::MC,
                            Family::VanLeer,   Family::VanAlbada, Family::Berger1,
                            Family::Berger2};

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::pair<double, double> random_admissible(SplitMix64& rng) {
  const double A = std::exp(rng.uniform(std::log(0.1), std::log(8.0)));
  const double cap = std::min(2.0, 2.0 * A);
  const double B = rng.uniform(1e-3, cap * (1.0 - 1e-3));
  return {A, B};
}

void criterion_1_order_condition() {
  SplitMix64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto [A, B] = random_admissible(rng);
    for (Family fam : kEnhanced) {
      const auto p = limiters::make_params(fam, A, B);
      worst = std::max(worst, std::abs(limiters::eval_enhanced(fam, p, A) - B));
    }
  }
  report(1, "order condition phi_{A,B}(A) = B", worst <= 1e-13,
         "max defect " + std::to_string(worst) + " over 1e4 (A,B) x 7 families");
}

void criterion_2_tvd_box() {
  SplitMix64 rng(202);
  std::vector<double> thetas = {-1e6, -10.0, -1.0, -1e-9, 0.0};
  for (int i = 0; i <= 60; ++i) thetas.push_back(std::pow(10.0, -6.0 + 0.2 * i));
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 400 && ok; ++trial) {
    const auto [A, B] = random_admissible(rng);
    for (Family fam : kEnhanced) {
      const auto p = limiters::make_params(fam, A, B);
      auto probe = [&](double theta) {
        const double phi = limiters::eval_enhanced(fam, p, theta);
        if (theta <= 0.0) {
          if (phi != 0.0) ok = false;
          return;
        }
        worst = std::max({worst, phi - 2.0, phi / theta - 2.0, -phi});
        if (phi < 0.0 || phi > 2.0 + 1e-12 || phi / theta > 2.0 + 1e-12) ok = false;
      };
      for (double theta : thetas) probe(theta);
      probe(A);
      // conventional flavors stay inside the box as well
      const double phic = limiters::eval_conventional(fam, thetas[trial % thetas.size()]);
      if (phic < 0.0 || phic > 2.0 + 1e-12) ok = false;
    }
  }
  report(2, "TVD box 0 <= phi <= 2, 0 <= phi/theta <= 2", ok,
         "max excess " + std::to_string(std::max(0.0, worst)));
}

void criterion_3_rep_tvd() {
  SplitMix64 rng(303);
  bool ok = true;
  double worst_tv = 0.0, worst_coeff = 0.0;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const int n = 16 + static_cast<int>(rng.next() % 100);
    const double r = rng.uniform(0.0, 0.45);
    const mesh::Grid1D grid =
        mesh::perturb_grid(mesh::uniform_grid(-1.0, 1.0, n), {r, rng.next()});
    advection::RepState s;
    s.grid = &grid;
    s.c = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    s.u.resize(n);
    for (double& v : s.u) v = rng.uniform(-1.0, 1.0);
    double dx_min = grid.sizes[0];
    for (double dx : grid.sizes) dx_min = std::min(dx_min, dx);
    s.dt = rng.uniform01() * dx_min / std::abs(s.c);

    const LimiterSpec spec{kEnhanced[trial % 7], Flavor::Enhanced};
    const auto sigma = advection::limited_slopes(s, spec);
    const auto res = advection::rep_step(s, sigma);
    worst_tv = std::max(worst_tv, res.diag.tv_after - res.diag.tv_before);
    const auto& coeff = s.c > 0 ? res.diag.coeff_C : res.diag.coeff_D;
    for (double v : coeff) worst_coeff = std::max({worst_coeff, -v, v - 1.0});
    if (res.diag.tv_after > res.diag.tv_before + 1e-12 || worst_coeff > 1e-12) ok = false;
  }
  report(3, "scalar REP TVD + Harten coefficients in [0,1]", ok,
         "max TV growth " + std::to_string(worst_tv) + ", max coeff excess " +
             std::to_string(worst_coeff));
}

void criterion_4_symmetry() {
  SplitMix64 rng(404);
  double worst = 0.0;
  for (Family fam : kEnhanced) {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 16 + static_cast<int>(rng.next() % 80);
      const double r = rng.uniform(0.0, 0.45);
      const mesh::Grid1D grid =
          mesh::perturb_grid(mesh::uniform_grid(-1.0, 1.0, n), {r, rng.next()});
      advection::RepState s;
      s.grid = &grid;
      s.c = rng.uniform01() < 0.5 ? 1.0 : -1.0;
      s.u.resize(n);
      for (double& v : s.u) v = rng.uniform(-1.0, 1.0);
      double dx_min = grid.sizes[0];
      for (double dx : grid.sizes) dx_min = std::min(dx_min, dx);
      s.dt = rng.uniform01() * dx_min / std::abs(s.c);
      worst = std::max(worst, advection::symmetry_pair_check(s, {fam, Flavor::Enhanced}));
    }
  }
  report(4, "symmetry-preserving mirror defect <= 1e-12", worst <= 1e-12,
         "max defect " + std::to_string(worst) + " over 200 trials x 7 families");
}

void criterion_5_linearity() {
  SplitMix64 rng(505);
  double worst_enh = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double l = rng.uniform(0.2, 3.0), m = rng.uniform(0.2, 3.0), rr = rng.uniform(0.2, 3.0);
    const double slope = rng.uniform(-3.0, 3.0), off = rng.uniform(-1.0, 1.0);
    const double xl = -0.5 * l - 0.5 * m, xr = 0.5 * m + 0.5 * rr;  // neighbor centers vs 0
    for (Family fam : kEnhanced) {
      const double sigma = advection::limited_slope_local(
          {fam, Flavor::Enhanced}, l, m, rr, off + slope * xl, off, off + slope * xr);
      worst_enh = std::max(worst_enh, std::abs(sigma - slope));
    }
  }
  double worst_conv = 1e30;  // smallest conventional defect must exceed 1e-3
  for (Family fam : {Family::Minmod, Family::Superbee, Family::MC, Family::VanLeer,
                     Family::VanAlbada}) {
    const double sigma = advection::limited_slope_local({fam, Flavor::Conventional}, 1.0, 2.0,
                                                        1.0, 0.5, 2.0, 3.5);
    worst_conv = std::min(worst_conv, std::abs(sigma - 1.0));
  }
  const bool pass = worst_enh <= 1e-12 && worst_conv >= 1e-3;
  report(5, "linearity: enhanced exact, conventional fails on (1,2,1)", pass,
         "enhanced defect " + std::to_string(worst_enh) + ", conventional defect " +
             std::to_string(worst_conv));
}

void criterion_6_convergence_1d() {
  analysis::RateStudyRequest req;
  req.problem = "smooth1d";
  req.sizes = {100, 200, 400, 800, 1600};
  req.perturb_r = 0.2;
  req.seed = 7;
  req.reference_n = 25600;
  for (Family fam : kEnhanced) req.schemes.push_back({fam, Flavor::Enhanced});
  req.schemes.push_back({Family::VanAlbada, Flavor::Conventional});

  const auto table = analysis::rate_study(req);
  auto rate = [&](Family fam, Flavor fl) { return table.finest_rate({fam, fl}, "p"); };

  bool pass = true;
  std::string detail;
  for (Family fam : {Family::MC, Family::VanLeer, Family::VanAlbada, Family::Berger1,
                     Family::Berger2}) {
    const double r = rate(fam, Flavor::Enhanced);
    detail += limiters::family_name(fam) + "=" + std::to_string(r).substr(0, 6) + " ";
    if (r < 1.8) pass = false;
  }
  for (Family fam : {Family::Minmod, Family::Superbee}) {
    const double r = rate(fam, Flavor::Enhanced);
    detail += limiters::family_name(fam) + "=" + std::to_string(r).substr(0, 6) + " ";
    if (r < 1.3 || r > 1.95) pass = false;
  }
  const double rc = rate(Family::VanAlbada, Flavor::Conventional);
  detail += "conv_va=" + std::to_string(rc).substr(0, 6);
  if (rc > 1.35) pass = false;
  report(6, "1D smooth-Euler pressure rates (N=100..1600, r=0.2)", pass, detail);
}

void criterion_7_convergence_2d(bool full) {
  analysis::RateStudyRequest req;
  req.problem = "vortex2d";
  req.perturb_r = 0.2;
  req.seed = 7;
  req.schemes = {{Family::VanAlbada, Flavor::Enhanced}, {Family::MC, Flavor::Enhanced}};
  if (full) {
    req.sizes = {20, 40, 80, 160};
    req.schemes.push_back({Family::VanAlbada, Flavor::Conventional});
  } else {
    req.sizes = {20, 40, 80};
  }
  const auto table = analysis::rate_study(req);
  const double va = table.finest_rate({Family::VanAlbada, Flavor::Enhanced}, "p");
  const double mc = table.finest_rate({Family::MC, Flavor::Enhanced}, "p");

  bool pass;
  std::string detail = "va=" + std::to_string(va).substr(0, 6) +
                       " mc=" + std::to_string(mc).substr(0, 6);
  if (full) {
    const double cv = table.finest_rate({Family::VanAlbada, Flavor::Conventional}, "p");
    detail += " conv_va=" + std::to_string(cv).substr(0, 6) + " (full ladder to 160^2)";
    pass = va >= 1.8 && mc >= 1.7 && cv <= 1.4;
  } else {
    detail += " (reduced ladder to 80^2)";
    pass = va >= 1.5 && mc >= 1.5;
  }
  report(7, "2D vortex pressure rates (r=0.2)", pass, detail);
}

struct ShockRun {
  bool completed = false;
  double min_rho = 0.0, min_p = 0.0, tv_growth = 0.0;
  std::string error;
};

ShockRun run_1d_case(const std::string& name, int n, double r, std::uint64_t seed) {
  ShockRun out;
  try {
    const auto pb = std::get<problems::Problem1D>(problems::by_name(name));
    const auto grid = runner::make_grid(pb, n, r, seed);
    solver::SchemeConfig sc;
    sc.limiter = {Family::VanAlbada, Flavor::Enhanced};
    const auto res = runner::run(pb, grid, sc, {0.6, -1.0});
    out.completed = res.t_final >= pb.t_end - 1e-10;
    out.min_rho = 1e30;
    out.min_p = 1e30;
    double tv0 = res.diagnostics.empty() ? 0.0 : res.diagnostics.front().tv_rho, tvmax = 0.0;
    for (const auto& row : res.diagnostics) {
      out.min_rho = std::min(out.min_rho, row.min_rho);
      out.min_p = std::min(out.min_p, row.min_p);
      tvmax = std::max(tvmax, row.tv_rho);
    }
    out.tv_growth = tv0 > 0.0 ? tvmax / tv0 - 1.0 : 0.0;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

void criterion_8_shock_robustness() {
  const ShockRun sod = run_1d_case("sod", 200, 0.3, 3);
  const ShockRun ds = run_1d_case("double_shock", 150, 0.3, 3);
  const ShockRun blast = run_1d_case("blast", 200, 0.3, 3);
  bool pass = sod.completed && ds.completed && blast.completed;
  for (const ShockRun* r : {&sod, &ds, &blast})
    if (!(r->min_rho > 0.0 && r->min_p > 0.0)) pass = false;
  if (sod.tv_growth > 0.05) pass = false;
  std::string detail;
  if (!sod.error.empty()) detail += "sod: " + sod.error + " ";
  if (!ds.error.empty()) detail += "double_shock: " + ds.error + " ";
  if (!blast.error.empty()) detail += "blast: " + blast.error + " ";
  if (detail.empty())
    detail = "sod TV growth " + std::to_string(100 * sod.tv_growth) + "%, min p " +
             std::to_string(std::min({sod.min_p, ds.min_p, blast.min_p}));
  report(8, "1D shock cases complete and stay physical", pass, detail);
}

void criterion_9_benchmarks_2d(bool full) {
  const int step_nx = full ? 150 : 75, step_ny = full ? 50 : 25;
  const int dmr_nx = full ? 480 : 240, dmr_ny = full ? 120 : 60;
  bool pass = true;
  std::string detail;

  solver::SchemeConfig sc;
  sc.limiter = {Family::VanAlbada, Flavor::Enhanced};

  try {
    const auto pb = problems::wind_tunnel_step();
    const auto grid = runner::make_grid(pb, step_nx, step_ny, 0.3, 3);
    const auto res = runner::run(pb, grid, sc, {0.6, -1.0});
    double min_p = 1e30;
    for (const auto& row : res.diagnostics) min_p = std::min(min_p, row.min_p);
    detail += "step(" + std::to_string(step_nx) + "x" + std::to_string(step_ny) +
              ") min p " + std::to_string(min_p);
    if (!(res.t_final >= pb.t_end - 1e-10 && min_p > 0.0)) pass = false;
  } catch (const std::exception& e) {
    pass = false;
    detail += std::string("step failed: ") + e.what();
  }

  try {
    const auto pb = problems::double_mach_reflection();
    const auto grid = runner::make_grid(pb, dmr_nx, dmr_ny, 0.3, 3);
    const auto res = runner::run(pb, grid, sc, {0.6, -1.0});
    double min_p = 1e30;
    for (const auto& row : res.diagnostics) min_p = std::min(min_p, row.min_p);
    if (!(res.t_final >= pb.t_end - 1e-10 && min_p > 0.0)) pass = false;

    // shock front on the top interior row vs the imposed exact position
    const auto& f = res.field;
    const int j = f.ny() - 1;
    double measured = f.grid.x.centers[0];
    for (int i = 0; i < f.nx(); ++i)
      if (f.u[f.idx(i, j)].rho() > 0.5 * (8.0 + 1.4)) measured = f.grid.x.centers[i];
    const double exact = problems::dmr_shock_front_x(res.t_final);
    const double err_cells = std::abs(measured - exact) / f.grid.x.reference_size;
    detail += ", dmr(" + std::to_string(dmr_nx) + "x" + std::to_string(dmr_ny) +
              ") front offset " + std::to_string(err_cells) + " cells";
    if (err_cells > 2.0) pass = false;
  } catch (const std::exception& e) {
    pass = false;
    detail += std::string(", dmr failed: ") + e.what();
  }
  report(9, "2D benchmarks complete without non-physical states", pass, detail);
}

void criterion_10_appendix_b() {
  const bool admissible = limiters::admissible(1.0, 1.2);
  const bool feasible = limiters::alt_monitor_feasible(1.0, 1.2);
  report(10, "alternative-monitor witness at (1, 1.2)", admissible && !feasible,
         std::string("admissible=") + (admissible ? "yes" : "no") + ", feasible=" +
             (feasible ? "yes" : "no"));
}

void criterion_11_flux_equivalence() {
  SplitMix64 rng(1111);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 16 + static_cast<int>(rng.next() % 100);
    const double r = rng.uniform(0.0, 0.45);
    const mesh::Grid1D grid =
        mesh::perturb_grid(mesh::uniform_grid(-1.0, 1.0, n), {r, rng.next()});
    advection::RepState s;
    s.grid = &grid;
    s.c = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    s.u.resize(n);
    for (double& v : s.u) v = rng.uniform(-1.0, 1.0);
    double dx_min = grid.sizes[0];
    for (double dx : grid.sizes) dx_min = std::min(dx_min, dx);
    s.dt = rng.uniform01() * dx_min / std::abs(s.c);

    const LimiterSpec spec{kEnhanced[trial % 7], Flavor::Enhanced};
    const auto sigma = advection::limited_slopes(s, spec);
    const auto rep = advection::rep_step(s, sigma);
    const auto flux = advection::flux_form_update(s, sigma);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(rep.u_next[i] - flux[i]));
  }
  report(11, "REP update equals its flux-form reformulation", worst <= 1e-13,
         "max difference " + std::to_string(worst) + " over 500 cases");
}

}  // namespace

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
  const auto t0 = std::chrono::steady_clock::now();
  std::printf("acceptance suite (%s mode)\n", full ? "full" : "fast-CI");

  criterion_1_order_condition();
  criterion_2_tvd_box();
  criterion_3_rep_tvd();
  criterion_4_symmetry();
  criterion_5_linearity();
  criterion_6_convergence_1d();
  criterion_7_convergence_2d(full);
  criterion_8_shock_robustness();
  criterion_9_benchmarks_2d(full);
  criterion_10_appendix_b();
  criterion_11_flux_equivalence();

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 11 criteria passed in %.1f s\n", 11 - g_failures, secs);
  return g_failures;
}
