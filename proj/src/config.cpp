#include "nufv/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nufv/problems.hpp"

namespace nufv::config {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return d;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': not an integer: '" + value + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "problem") {
    cfg.problem = value;
  } else if (key == "nx") {
    cfg.nx = static_cast<int>(parse_int(key, value));
  } else if (key == "ny") {
    cfg.ny = static_cast<int>(parse_int(key, value));
  } else if (key == "perturb-r") {
    cfg.perturb_r = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "limiter") {
    cfg.family = limiters::family_from_name(value);
  } else if (key == "flavor") {
    cfg.flavor = limiters::flavor_from_name(value);
  } else if (key == "cfl") {
    cfg.cfl = parse_double(key, value);
  } else if (key == "t-end") {
    cfg.t_end = parse_double(key, value);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "output-times") {
    cfg.output_times.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) cfg.output_times.push_back(parse_double(key, trim(item)));
  } else if (key == "entropy-fix") {
    if (value == "on")
      cfg.entropy_fix = true;
    else if (value == "off")
      cfg.entropy_fix = false;
    else
      throw std::invalid_argument("config key 'entropy-fix': expected on|off, got '" + value +
                                  "'");
  } else if (key == "limit-vars") {
    if (value == "conservative")
      cfg.limit_vars = solver::LimitVars::Conservative;
    else if (value == "primitive")
      cfg.limit_vars = solver::LimitVars::Primitive;
    else
      throw std::invalid_argument(
          "config key 'limit-vars': expected conservative|primitive, got '" + value + "'");
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + line + "'");
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str());
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "problem=" << cfg.problem << '\n';
  os << "nx=" << cfg.nx << '\n';
  if (cfg.ny > 0) os << "ny=" << cfg.ny << '\n';
  os << "perturb-r=" << cfg.perturb_r << '\n';
  os << "seed=" << cfg.seed << '\n';
  os << "limiter=" << limiters::family_name(cfg.family) << '\n';
  os << "flavor=" << limiters::flavor_name(cfg.flavor) << '\n';
  os << "cfl=" << cfg.cfl << '\n';
  if (cfg.t_end > 0.0) os << "t-end=" << cfg.t_end << '\n';
  os << "out=" << cfg.out << '\n';
  if (!cfg.output_times.empty()) {
    os << "output-times=";
    for (size_t i = 0; i < cfg.output_times.size(); ++i)
      os << (i ? "," : "") << cfg.output_times[i];
    os << '\n';
  }
  os << "entropy-fix=" << (cfg.entropy_fix ? "on" : "off") << '\n';
  os << "limit-vars="
     << (cfg.limit_vars == solver::LimitVars::Conservative ? "conservative" : "primitive")
     << '\n';
  return os.str();
}

void validate(const RunConfig& cfg) {
  std::vector<std::string> missing;
  if (cfg.problem.empty()) missing.push_back("problem");
  if (cfg.nx <= 0) missing.push_back("nx");
  if (!missing.empty()) {
    std::string msg = "config missing required keys:";
    for (const auto& k : missing) msg += " " + k;
    throw std::invalid_argument(msg);
  }
  const int dim = problems::dimension_of(cfg.problem);
  if (dim == 2 && cfg.ny <= 0)
    throw std::invalid_argument("config: 2D problem '" + cfg.problem + "' requires ny");
  if (dim == 1 && cfg.ny > 0)
    throw std::invalid_argument("config: 1D problem '" + cfg.problem + "' does not take ny");
  if (!(cfg.perturb_r >= 0.0 && cfg.perturb_r < 0.5))
    throw std::invalid_argument("config: perturb-r must lie in [0, 0.5)");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
    throw std::invalid_argument("config: cfl must lie in (0, 1]");
}

std::string run_id(const RunConfig& cfg) {
  std::ostringstream os;
  os << cfg.problem << "_n" << cfg.nx;
  if (cfg.ny > 0) os << "x" << cfg.ny;
  os << "_r" << cfg.perturb_r << "_s" << cfg.seed << "_"
     << limiters::family_name(cfg.family) << "-" << limiters::flavor_name(cfg.flavor);
  return os.str();
}

}  // namespace nufv::config
