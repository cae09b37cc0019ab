#include "nufv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "nufv/rng.hpp"

namespace nufv::analysis {

double l1_error(std::span<const double> weights, std::span<const double> values,
                std::span<const double> reference) {
  if (weights.size() != values.size() || values.size() != reference.size())
    throw std::invalid_argument("l1_error: mismatched lengths");
  double e = 0.0;
  for (size_t i = 0; i < values.size(); ++i) e += weights[i] * std::abs(values[i] - reference[i]);
  return e;
}

double convergence_rate(double e1, double h1, double e2, double h2) {
  if (!(e1 > 0.0) || !(e2 > 0.0)) throw std::invalid_argument("convergence_rate: errors must be positive");
  if (!(h1 > 0.0) || !(h2 > 0.0) || h1 == h2)
    throw std::invalid_argument("convergence_rate: sizes must be positive and distinct");
  return (std::log(e1) - std::log(e2)) / (std::log(h1) - std::log(h2));
}

double total_variation(std::span<const double> u) {
  double tv = 0.0;
  for (size_t i = 0; i + 1 < u.size(); ++i) tv += std::abs(u[i + 1] - u[i]);
  return tv;
}

std::vector<double> tv_series(const std::vector<std::vector<double>>& history) {
  std::vector<double> out;
  out.reserve(history.size());
  for (const auto& u : history) out.push_back(total_variation(u));
  return out;
}

double interp_linear(std::span<const double> x, std::span<const double> y, double q) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("interp_linear: bad input");
  if (q < x.front() || q > x.back())
    throw std::invalid_argument("interp_linear: query outside sample range");
  const auto it = std::upper_bound(x.begin(), x.end(), q);
  const size_t hi = std::min<size_t>(std::distance(x.begin(), it), x.size() - 1);
  const size_t lo = hi - 1;
  const double w = (q - x[lo]) / (x[hi] - x[lo]);
  return (1.0 - w) * y[lo] + w * y[hi];
}

std::vector<double> extract_prim(const solver::Field1D& f, const euler::GasModel& gas, char var) {
  std::vector<double> out(f.grid.n());
  for (int i = 0; i < f.grid.n(); ++i) {
    const euler::Prim<1> q = euler::cons_to_prim(f.u[i], gas);
    out[i] = var == 'r' ? q.rho : (var == 'u' ? q.vel[0] : q.p);
  }
  return out;
}

std::vector<double> extract_prim(const solver::Field2D& f, const euler::GasModel& gas, char var) {
  std::vector<double> out;
  out.reserve(f.u.size());
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i) {
      const euler::Prim<2> q = euler::cons_to_prim(f.u[f.idx(i, j)], gas);
      out.push_back(var == 'r' ? q.rho
                               : (var == 'u' ? q.vel[0] : (var == 'v' ? q.vel[1] : q.p)));
    }
  return out;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 rng(seed ^ (tag * 0x9E3779B97F4A7C15ull));
  return rng.next();
}

double RateTable::finest_rate(const limiters::LimiterSpec& scheme,
                              const std::string& variable) const {
  const RateRow* best = nullptr;
  for (const auto& r : rows) {
    if (r.scheme.family != scheme.family || r.scheme.flavor != scheme.flavor ||
        r.variable != variable)
      continue;
    if (best == nullptr || r.n_fine > best->n_fine) best = &r;
  }
  if (best == nullptr) throw std::invalid_argument("finest_rate: no matching rows");
  return best->rate;
}

namespace {

struct ErrorSet {
  std::map<std::string, double> by_var;
};

solver::SchemeConfig scheme_config(const limiters::LimiterSpec& spec,
                                   const RateStudyRequest& req) {
  solver::SchemeConfig sc;
  sc.limiter = spec;
  sc.entropy_fix.enabled = req.entropy_fix;
  sc.limit_vars = req.limit_vars;
  return sc;
}

ErrorSet smooth1d_errors(const RateStudyRequest& req, const limiters::LimiterSpec& spec, int n,
                         double t_end, const std::vector<double>& ref_x,
                         const std::map<std::string, std::vector<double>>& ref) {
  const problems::Problem1D pb = problems::smooth_euler_1d();
  const mesh::Grid1D grid =
      runner::make_grid(pb, n, req.perturb_r, sub_seed(req.seed, static_cast<std::uint64_t>(n)));
  solver::TimeControls controls{req.cfl, t_end};
  const auto result = runner::run(pb, grid, scheme_config(spec, req), controls);

  ErrorSet out;
  for (const char var : {'r', 'u', 'p'}) {
    const std::vector<double> values =
        extract_prim(result.field, euler::GasModel{}, var);
    std::vector<double> sampled(grid.n());
    const auto& ref_values = ref.at(std::string(1, var));
    for (int i = 0; i < grid.n(); ++i)
      sampled[i] = interp_linear(ref_x, ref_values, grid.centers[i]);
    out.by_var[std::string(1, var)] = l1_error(grid.sizes, values, sampled);
  }
  return out;
}

ErrorSet vortex_errors(const RateStudyRequest& req, const limiters::LimiterSpec& spec, int n,
                       double t_end) {
  const problems::Problem2D pb = problems::isentropic_vortex_2d();
  const mesh::Grid2D grid =
      runner::make_grid(pb, n, n, req.perturb_r, sub_seed(req.seed, static_cast<std::uint64_t>(n)));
  solver::TimeControls controls{req.cfl, t_end};
  const auto result = runner::run(pb, grid, scheme_config(spec, req), controls);

  std::vector<double> weights;
  weights.reserve(result.field.u.size());
  for (int j = 0; j < grid.y.n(); ++j)
    for (int i = 0; i < grid.x.n(); ++i) weights.push_back(grid.x.sizes[i] * grid.y.sizes[j]);

  ErrorSet out;
  for (const char var : {'r', 'u', 'v', 'p'}) {
    const std::vector<double> values = extract_prim(result.field, euler::GasModel{}, var);
    std::vector<double> exact;
    exact.reserve(values.size());
    for (int j = 0; j < grid.y.n(); ++j)
      for (int i = 0; i < grid.x.n(); ++i) {
        const euler::Prim<2> q = pb.ic(grid.x.centers[i], grid.y.centers[j]);
        exact.push_back(var == 'r' ? q.rho
                                   : (var == 'u' ? q.vel[0] : (var == 'v' ? q.vel[1] : q.p)));
      }
    out.by_var[std::string(1, var)] = l1_error(weights, values, exact);
  }
  return out;
}

}  // namespace

RateTable rate_study(const RateStudyRequest& req) {
  if (req.sizes.size() < 2) throw std::invalid_argument("rate_study: need at least two sizes");
  if (req.problem != "smooth1d" && req.problem != "vortex2d")
    throw std::invalid_argument("rate_study: unsupported problem '" + req.problem + "'");
  const bool is_1d = req.problem == "smooth1d";
  const double t_end = req.t_end > 0.0 ? req.t_end : (is_1d ? 0.1 : 10.0);

  // Fine-grid reference for the 1D problem, computed once on a uniform mesh
  // with the enhanced MC scheme.
  std::vector<double> ref_x;
  std::map<std::string, std::vector<double>> ref;
  if (is_1d) {
    const problems::Problem1D pb = problems::smooth_euler_1d();
    const mesh::Grid1D fine = mesh::uniform_grid(pb.a, pb.b, req.reference_n);
    RateStudyRequest ref_req = req;
    const limiters::LimiterSpec mc{limiters::Family::MC, limiters::Flavor::Enhanced};
    solver::TimeControls controls{req.cfl, t_end};
    const auto result = runner::run(pb, fine, scheme_config(mc, ref_req), controls);
    ref_x = fine.centers;
    for (const char var : {'r', 'u', 'p'})
      ref[std::string(1, var)] = extract_prim(result.field, euler::GasModel{}, var);
  }

  RateTable table;
  const std::vector<std::string> vars =
      is_1d ? std::vector<std::string>{"r", "u", "p"} : std::vector<std::string>{"r", "u", "v", "p"};
  const double span = is_1d ? 2.0 : 10.0;

  for (const auto& spec : req.schemes) {
    std::vector<ErrorSet> errors;
    for (int n : req.sizes)
      errors.push_back(is_1d ? smooth1d_errors(req, spec, n, t_end, ref_x, ref)
                             : vortex_errors(req, spec, n, t_end));
    for (size_t s = 0; s + 1 < req.sizes.size(); ++s) {
      const double h1 = span / req.sizes[s];
      const double h2 = span / req.sizes[s + 1];
      for (const auto& var : vars) {
        RateRow row;
        row.scheme = spec;
        row.variable = var == "r" ? "rho" : var;
        row.n_coarse = req.sizes[s];
        row.n_fine = req.sizes[s + 1];
        row.e_coarse = errors[s].by_var.at(var);
        row.e_fine = errors[s + 1].by_var.at(var);
        row.rate = convergence_rate(row.e_coarse, h1, row.e_fine, h2);
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

void write_rates_csv(std::ostream& os, const RateTable& table) {
  os << "limiter,flavor,variable,n_coarse,n_fine,e_coarse,e_fine,rate\n";
  os.precision(12);
  for (const auto& r : table.rows)
    os << limiters::family_name(r.scheme.family) << ',' << limiters::flavor_name(r.scheme.flavor)
       << ',' << r.variable << ',' << r.n_coarse << ',' << r.n_fine << ',' << r.e_coarse << ','
       << r.e_fine << ',' << r.rate << '\n';
}

void write_rates_markdown(std::ostream& os, const RateTable& table) {
  // Mirrors the paper's layout: one column per scheme, one row per variable,
  // finest-pair rates.
  std::vector<limiters::LimiterSpec> schemes;
  std::vector<std::string> vars;
  for (const auto& r : table.rows) {
    const bool have_scheme =
        std::any_of(schemes.begin(), schemes.end(), [&](const limiters::LimiterSpec& s) {
          return s.family == r.scheme.family && s.flavor == r.scheme.flavor;
        });
    if (!have_scheme) schemes.push_back(r.scheme);
    if (std::find(vars.begin(), vars.end(), r.variable) == vars.end()) vars.push_back(r.variable);
  }
  os << "| variable |";
  for (const auto& s : schemes)
    os << ' ' << limiters::family_name(s.family) << ':' << limiters::flavor_name(s.flavor)
       << " |";
  os << "\n|---|";
  for (size_t i = 0; i < schemes.size(); ++i) os << "---|";
  os << '\n';
  os.precision(5);
  for (const auto& var : vars) {
    os << "| " << var << " |";
    for (const auto& s : schemes) os << ' ' << table.finest_rate(s, var) << " |";
    os << '\n';
  }
}

}  // namespace nufv::analysis
