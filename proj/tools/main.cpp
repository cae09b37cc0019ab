#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nufv/advection.hpp"
#include "nufv/analysis.hpp"
#include "nufv/config.hpp"
#include "nufv/mesh.hpp"
#include "nufv/problems.hpp"
#include "nufv/rng.hpp"
#include "nufv/runner.hpp"

namespace fs = std::filesystem;
using namespace nufv;

namespace {

/// Optional config file plus per-key overrides; flags win over the file.
struct ConfigCli {
  std::string config_file;
  std::vector<std::pair<std::string, std::string>> overrides;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "config file (key=value lines)");
    for (const char* key : {"problem", "nx", "ny", "perturb-r", "seed", "limiter", "flavor",
                            "cfl", "t-end", "out", "output-times", "entropy-fix", "limit-vars"}) {
      const std::string k = key;
      app->add_option_function<std::string>(
          "--" + k, [this, k](const std::string& v) { overrides.emplace_back(k, v); },
          "config key '" + k + "'");
    }
  }

  config::RunConfig resolve() const {
    config::RunConfig cfg;
    if (!config_file.empty()) cfg = config::parse_config_file(config_file);
    for (const auto& [k, v] : overrides) config::apply_key(cfg, k, v);
    return cfg;
  }
};

solver::SchemeConfig scheme_from(const config::RunConfig& cfg) {
  solver::SchemeConfig sc;
  sc.limiter = {cfg.family, cfg.flavor};
  sc.entropy_fix.enabled = cfg.entropy_fix;
  sc.limit_vars = cfg.limit_vars;
  return sc;
}

std::string time_tag(double t) {
  std::ostringstream os;
  os << "t" << t;
  return os.str();
}

int cmd_run(const ConfigCli& cli) {
  config::RunConfig cfg = cli.resolve();
  config::validate(cfg);

  const fs::path dir = fs::path(cfg.out) / config::run_id(cfg);
  fs::create_directories(dir);
  {
    std::ofstream os(dir / "config.txt");
    os << config::render_config(cfg);
  }

  const solver::SchemeConfig scheme = scheme_from(cfg);
  const solver::TimeControls controls{cfg.cfl, cfg.t_end};
  const int dim = problems::dimension_of(cfg.problem);

  if (dim == 1) {
    const auto pb = std::get<problems::Problem1D>(problems::by_name(cfg.problem));
    const auto grid = runner::make_grid(pb, cfg.nx, cfg.perturb_r, cfg.seed);
    std::vector<double> times = cfg.output_times;
    if (times.empty()) times.push_back(cfg.t_end > 0 ? cfg.t_end : pb.t_end);
    const auto result = runner::run(pb, grid, scheme, controls, times,
                                    [&](double t, const solver::Field1D& f) {
                                      std::ofstream os(dir / (time_tag(t) + ".csv"));
                                      runner::write_solution_csv(os, f, scheme.gas);
                                    });
    std::ofstream os(dir / "diagnostics.csv");
    runner::write_diagnostics_csv(os, result.diagnostics);
  } else {
    const auto pb = std::get<problems::Problem2D>(problems::by_name(cfg.problem));
    const auto grid = runner::make_grid(pb, cfg.nx, cfg.ny, cfg.perturb_r, cfg.seed);
    std::vector<double> times = cfg.output_times;
    if (times.empty()) times.push_back(cfg.t_end > 0 ? cfg.t_end : pb.t_end);
    const auto result = runner::run(pb, grid, scheme, controls, times,
                                    [&](double t, const solver::Field2D& f) {
                                      std::ofstream os(dir / (time_tag(t) + ".csv"));
                                      runner::write_solution_csv(os, f, scheme.gas);
                                    });
    std::ofstream os(dir / "diagnostics.csv");
    runner::write_diagnostics_csv(os, result.diagnostics);
  }
  std::cout << "wrote " << dir.string() << "\n";
  return 0;
}

struct RateCli {
  ConfigCli base;
  std::string limiters_arg = "mc:enhanced";
  std::string sizes_arg = "100,200,400,800,1600";
  int reference_n = 25600;
};

int cmd_rate_study(const RateCli& cli) {
  config::RunConfig cfg = cli.base.resolve();
  if (cfg.problem.empty()) cfg.problem = "smooth1d";

  analysis::RateStudyRequest req;
  req.problem = cfg.problem;
  req.perturb_r = cfg.perturb_r;
  req.seed = cfg.seed;
  req.cfl = cfg.cfl;
  req.t_end = cfg.t_end;
  req.reference_n = cli.reference_n;
  req.entropy_fix = cfg.entropy_fix;
  req.limit_vars = cfg.limit_vars;

  std::stringstream ls(cli.limiters_arg);
  std::string item;
  while (std::getline(ls, item, ',')) {
    const auto colon = item.find(':');
    limiters::LimiterSpec spec;
    spec.family = limiters::family_from_name(colon == std::string::npos ? item
                                                                        : item.substr(0, colon));
    spec.flavor = colon == std::string::npos
                      ? limiters::Flavor::Enhanced
                      : limiters::flavor_from_name(item.substr(colon + 1));
    req.schemes.push_back(spec);
  }
  std::stringstream ss(cli.sizes_arg);
  while (std::getline(ss, item, ',')) req.sizes.push_back(std::stoi(item));

  const analysis::RateTable table = analysis::rate_study(req);

  fs::create_directories(cfg.out);
  const fs::path csv = fs::path(cfg.out) / "rates.csv";
  {
    std::ofstream os(csv);
    analysis::write_rates_csv(os, table);
  }
  analysis::write_rates_markdown(std::cout, table);
  std::cout << "wrote " << csv.string() << "\n";
  return 0;
}

int cmd_advect_oracle(int trials, std::uint64_t seed, const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    os = &file;
  }
  (*os) << "trial,seed,tv_before,tv_after,defect\n";
  os->precision(15);

  const limiters::Family families[] = {
      limiters::Family::Minmod,  limiters::Family::Superbee, limiters::Family::MC,
      limiters::Family::VanLeer, limiters::Family::VanAlbada, limiters::Family::Berger1,
      limiters::Family::Berger2};

  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = analysis::sub_seed(seed, trial + 1);
    SplitMix64 rng(trial_seed);
    const int n = 16 + static_cast<int>(rng.next() % 100);
    const double r = rng.uniform(0.0, 0.45);
    mesh::Grid1D grid =
        mesh::perturb_grid(mesh::uniform_grid(-1.0, 1.0, n), {r, rng.next()});

    advection::RepState state;
    state.grid = &grid;
    state.c = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    state.u.resize(n);
    for (double& v : state.u) v = rng.uniform(-1.0, 1.0);
    double dx_min = grid.sizes[0];
    for (double s : grid.sizes) dx_min = std::min(dx_min, s);
    state.dt = rng.uniform01() * dx_min / std::abs(state.c);

    const limiters::LimiterSpec spec{families[trial % 7], limiters::Flavor::Enhanced};
    const auto sigma = advection::limited_slopes(state, spec);
    const auto step = advection::rep_step(state, sigma);
    const double defect = advection::symmetry_pair_check(state, spec);

    (*os) << trial << ',' << trial_seed << ',' << step.diag.tv_before << ','
          << step.diag.tv_after << ',' << defect << '\n';
    if (step.diag.tv_after > step.diag.tv_before + 1e-12 || defect > 1e-12) ++failures;
  }
  if (failures > 0) {
    std::cerr << "error: " << failures << " oracle trials violated TVD/symmetry\n";
    return 1;
  }
  return 0;
}

int cmd_limiter_table(const std::string& limiter, const std::string& flavor, double A, double B,
                      int samples, const std::string& out_path) {
  const limiters::LimiterSpec spec{limiters::family_from_name(limiter),
                                   limiters::flavor_from_name(flavor)};
  const limiters::LimiterParams params =
      spec.flavor == limiters::Flavor::Enhanced && spec.family != limiters::Family::None
          ? limiters::make_params(spec.family, A, B)
          : limiters::LimiterParams{};

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    os = &file;
  }
  (*os) << "theta,phi,lower,upper\n";
  os->precision(12);
  for (int i = 0; i <= samples; ++i) {
    const double theta = -1.0 + 6.0 * i / samples;
    const double phi = limiters::eval(spec, params, theta);
    const auto bounds = limiters::sweby_bounds(params.A, params.B, theta);
    (*os) << theta << ',' << phi << ',' << bounds.lower << ',' << bounds.upper << '\n';
  }
  return 0;
}

int cmd_grid_gen(int nx, int ny, double a, double b, double r, std::uint64_t seed,
                 const std::string& out_path) {
  const mesh::Grid1D base = mesh::uniform_grid(a, b, nx);
  if (ny <= 0) {
    const mesh::Grid1D g = r > 0 ? mesh::perturb_grid(base, {r, seed}) : base;
    if (out_path.empty()) {
      mesh::write_faces_csv(std::cout, g);
    } else {
      mesh::write_faces_csv(out_path, g);
      std::cout << "wrote " << out_path << "\n";
    }
    return 0;
  }
  mesh::Grid2D g2{base, mesh::uniform_grid(a, b, ny)};
  if (r > 0) g2 = mesh::perturb_grid_2d(g2, {r, seed});
  const std::string prefix = out_path.empty() ? "grid" : out_path;
  mesh::write_faces_csv(prefix + "_x.csv", g2.x);
  mesh::write_faces_csv(prefix + "_y.csv", g2.y);
  std::cout << "wrote " << prefix << "_x.csv and " << prefix << "_y.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume solver with grid-aware slope limiters"};
  app.require_subcommand(1);

  ConfigCli run_cli;
  CLI::App* run = app.add_subcommand("run", "run one problem and dump solutions");
  run_cli.attach(run);

  RateCli rate_cli;
  CLI::App* rate = app.add_subcommand("rate-study", "convergence-rate study");
  rate_cli.base.attach(rate);
  rate->add_option("--limiters", rate_cli.limiters_arg,
                   "comma list of family[:flavor], e.g. mc:enhanced,van_albada:conventional");
  rate->add_option("--sizes", rate_cli.sizes_arg, "comma list of mesh sizes");
  rate->add_option("--reference-n", rate_cli.reference_n, "fine-grid reference resolution");

  int oracle_trials = 200;
  std::uint64_t oracle_seed = 0;
  std::string oracle_out;
  CLI::App* oracle = app.add_subcommand("advect-oracle", "randomized TVD/symmetry trials");
  oracle->add_option("--trials", oracle_trials, "number of trials");
  oracle->add_option("--seed", oracle_seed, "master seed");
  oracle->add_option("--out", oracle_out, "CSV output path (default stdout)");

  std::string lt_limiter = "van_albada", lt_flavor = "enhanced", lt_out;
  double lt_A = 1.0, lt_B = 1.0;
  int lt_samples = 600;
  CLI::App* lt = app.add_subcommand("limiter-table", "emit (theta, phi, bounds) CSV");
  lt->add_option("--limiter", lt_limiter, "family name");
  lt->add_option("--flavor", lt_flavor, "conventional|enhanced");
  lt->add_option("--A", lt_A, "parameter A");
  lt->add_option("--B", lt_B, "parameter B");
  lt->add_option("--samples", lt_samples, "number of theta samples");
  lt->add_option("--out", lt_out, "CSV output path (default stdout)");

  int gg_nx = 100, gg_ny = 0;
  double gg_a = -1.0, gg_b = 1.0, gg_r = 0.0;
  std::uint64_t gg_seed = 0;
  std::string gg_out;
  CLI::App* gg = app.add_subcommand("grid-gen", "generate a (perturbed) grid CSV");
  gg->add_option("--nx", gg_nx, "cell count");
  gg->add_option("--ny", gg_ny, "cell count in y (2D when > 0)");
  gg->add_option("--a", gg_a, "domain start");
  gg->add_option("--b", gg_b, "domain end");
  gg->add_option("--perturb-r", gg_r, "perturbation ratio in [0, 0.5)");
  gg->add_option("--seed", gg_seed, "rng seed");
  gg->add_option("--out", gg_out, "output path (default stdout; 2D: prefix)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_cli);
    if (rate->parsed()) return cmd_rate_study(rate_cli);
    if (oracle->parsed()) return cmd_advect_oracle(oracle_trials, oracle_seed, oracle_out);
    if (lt->parsed())
      return cmd_limiter_table(lt_limiter, lt_flavor, lt_A, lt_B, lt_samples, lt_out);
    if (gg->parsed()) return cmd_grid_gen(gg_nx, gg_ny, gg_a, gg_b, gg_r, gg_seed, gg_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
