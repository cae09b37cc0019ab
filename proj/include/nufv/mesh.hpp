#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nufv::mesh {

/// Non-uniform 1D grid: faces x_{i+1/2}, centers x_i and sizes dx_i.
/// Immutable after construction; safe to share across threads.
struct Grid1D {
  std::vector<double> faces;    // length n+1, strictly increasing
  std::vector<double> centers;  // length n, centers[i] = (faces[i]+faces[i+1])/2
  std::vector<double> sizes;    // length n, sizes[i] = faces[i+1]-faces[i]
  double reference_size = 0.0;  // (b-a)/n

  int n() const { return static_cast<int>(sizes.size()); }
  double a() const { return faces.front(); }
  double b() const { return faces.back(); }

  /// Builds centers/sizes from a strictly increasing face list; validates.
  static Grid1D from_faces(std::vector<double> faces);
};

/// Tensor-product Cartesian grid; cell (i,j) = x-cell i times y-cell j.
struct Grid2D {
  Grid1D x;
  Grid1D y;
};

struct PerturbationParams {
  double ratio = 0.0;      // r in [0, 0.5)
  std::uint64_t seed = 0;  // splitmix64 seed
};

Grid1D uniform_grid(double a, double b, int n);

/// Moves each interior face of a uniform grid by r*delta with delta drawn
/// uniformly from [-h, h]; endpoints stay fixed. Deterministic per seed.
Grid1D perturb_grid(const Grid1D& base, const PerturbationParams& params);

Grid2D uniform_grid_2d(double ax, double bx, int nx, double ay, double by, int ny);

/// Perturbs x and y axes with independent sub-streams derived from the seed.
Grid2D perturb_grid_2d(const Grid2D& base, const PerturbationParams& params);

/// Grid-geometry parameters of an interior cell:
///   A = (dx_{i-1}+dx_i)/(dx_i+dx_{i+1}),  B = 2 dx_i/(dx_i+dx_{i+1}).
/// Always satisfies 0 < B < min(2, 2A).
std::pair<double, double> cell_params(double dx_left, double dx_mid, double dx_right);
std::pair<double, double> cell_params(const Grid1D& grid, int i);

void write_faces_csv(std::ostream& os, const Grid1D& grid);
void write_faces_csv(const std::string& path, const Grid1D& grid);
Grid1D read_faces_csv(std::istream& is);
Grid1D read_faces_csv(const std::string& path);

}  // namespace nufv::mesh
