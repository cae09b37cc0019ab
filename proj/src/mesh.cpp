#include "nufv/mesh.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nufv/rng.hpp"

namespace nufv::mesh {

Grid1D Grid1D::from_faces(std::vector<double> faces) {
  if (faces.size() < 2) throw std::invalid_argument("grid needs at least two faces");
  Grid1D g;
  g.faces = std::move(faces);
  const int n = static_cast<int>(g.faces.size()) - 1;
  g.centers.resize(n);
  g.sizes.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!(g.faces[i] < g.faces[i + 1]))
      throw std::invalid_argument("grid faces must be strictly increasing");
    g.centers[i] = 0.5 * (g.faces[i] + g.faces[i + 1]);
    g.sizes[i] = g.faces[i + 1] - g.faces[i];
  }
  g.reference_size = (g.faces.back() - g.faces.front()) / n;
  return g;
}

Grid1D uniform_grid(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("uniform_grid: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("uniform_grid: requires a < b");
  std::vector<double> faces(n + 1);
  const double h = (b - a) / n;
  for (int i = 0; i <= n; ++i) faces[i] = a + i * h;
  faces[n] = b;
  return Grid1D::from_faces(std::move(faces));
}

namespace {

bool is_uniform(const Grid1D& g) {
  const double h = g.reference_size;
  for (double dx : g.sizes)
    if (std::abs(dx - h) > 1e-12 * h) return false;
  return true;
}

std::vector<double> perturb_faces(const Grid1D& base, double ratio, SplitMix64& rng) {
  const double h = base.reference_size;
  std::vector<double> faces = base.faces;
  const int n = base.n();
  for (int i = 1; i < n; ++i) {
    const double delta = rng.uniform(-h, h);
    faces[i] += ratio * delta;
  }
  return faces;
}

}  // namespace

Grid1D perturb_grid(const Grid1D& base, const PerturbationParams& params) {
  if (!(params.ratio >= 0.0 && params.ratio < 0.5))
    throw std::invalid_argument("perturb_grid: ratio must lie in [0, 0.5)");
  if (!is_uniform(base)) throw std::invalid_argument("perturb_grid: base grid must be uniform");
  SplitMix64 rng(params.seed);
  return Grid1D::from_faces(perturb_faces(base, params.ratio, rng));
}

Grid2D uniform_grid_2d(double ax, double bx, int nx, double ay, double by, int ny) {
  return Grid2D{uniform_grid(ax, bx, nx), uniform_grid(ay, by, ny)};
}

Grid2D perturb_grid_2d(const Grid2D& base, const PerturbationParams& params) {
  if (!(params.ratio >= 0.0 && params.ratio < 0.5))
    throw std::invalid_argument("perturb_grid_2d: ratio must lie in [0, 0.5)");
  // Independent per-axis streams seeded from the master seed.
  SplitMix64 master(params.seed);
  PerturbationParams px{params.ratio, master.next()};
  PerturbationParams py{params.ratio, master.next()};
  return Grid2D{perturb_grid(base.x, px), perturb_grid(base.y, py)};
}

std::pair<double, double> cell_params(double dx_left, double dx_mid, double dx_right) {
  const double A = (dx_left + dx_mid) / (dx_mid + dx_right);
  const double B = 2.0 * dx_mid / (dx_mid + dx_right);
  return {A, B};
}

std::pair<double, double> cell_params(const Grid1D& grid, int i) {
  if (i < 1 || i > grid.n() - 2)
    throw std::out_of_range("cell_params: cell has no interior neighbors");
  return cell_params(grid.sizes[i - 1], grid.sizes[i], grid.sizes[i + 1]);
}

void write_faces_csv(std::ostream& os, const Grid1D& grid) {
  os << "face\n";
  os.precision(17);
  for (double f : grid.faces) os << f << "\n";
}

void write_faces_csv(const std::string& path, const Grid1D& grid) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_faces_csv(os, grid);
}

Grid1D read_faces_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "face")
    throw std::runtime_error("grid csv: expected header 'face'");
  std::vector<double> faces;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    faces.push_back(std::stod(line));
  }
  return Grid1D::from_faces(std::move(faces));
}

Grid1D read_faces_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_faces_csv(is);
}

}  // namespace nufv::mesh
