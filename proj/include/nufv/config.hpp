#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nufv/limiters.hpp"
#include "nufv/solver.hpp"

namespace nufv::config {

/// Experiment description. File grammar: one `key=value` per line, blank
/// lines and `#` comments ignored, unknown keys rejected.
struct RunConfig {
  std::string problem;  // smooth1d|vortex2d|sod|double_shock|blast|step|dmr
  int nx = 0;           // required
  int ny = 0;           // required for 2D problems, rejected for 1D
  double perturb_r = 0.0;
  std::uint64_t seed = 0;
  limiters::Family family = limiters::Family::VanAlbada;
  limiters::Flavor flavor = limiters::Flavor::Enhanced;
  double cfl = 0.6;
  double t_end = -1.0;  // <0: problem default
  std::string out = "out";
  std::vector<double> output_times;  // empty: only t_end
  bool entropy_fix = true;
  solver::LimitVars limit_vars = solver::LimitVars::Primitive;

  bool operator==(const RunConfig&) const = default;
};

/// Applies one key=value pair; throws on unknown keys or malformed values.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Emits the full key=value form; parse_config_text(render(cfg)) == cfg.
std::string render_config(const RunConfig& cfg);

/// Range and dimensionality checks; lists missing required keys.
void validate(const RunConfig& cfg);

/// Directory name identifying a run: problem, mesh, perturbation, seed,
/// limiter.
std::string run_id(const RunConfig& cfg);

}  // namespace nufv::config
