#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <vector>

namespace amcheck {

/// Triangulated unit sphere; faces wind counterclockwise seen from
/// outside, every edge is shared by exactly two faces with opposite
/// orientation.
struct SphericalMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
  int level = 0;

  int edge_count() const;
  int euler_characteristic() const;
  bool orientation_consistent() const;
  /// Reverses every face (for the orientation-flip invariance test).
  SphericalMesh reversed() const;
};

/// Subdivided icosahedron with 20 * 4^level faces, vertices normalized
/// to the unit sphere. Levels above 8 are refused.
SphericalMesh icosphere(int level);

/// Plain-text export: one "v x y z" line per vertex, one "f i j l" line
/// per face with 0-based indices.
void write_mesh(const SphericalMesh& mesh, std::ostream& os);

/// Closed discrete loop on the sphere (last point equals the first);
/// consecutive points must stay within 0.3 rad for the discrete
/// holonomy to be meaningful.
struct LoopPath {
  std::vector<Eigen::Vector3d> points;

  /// Signed solid angle enclosed by the loop (fan decomposition from
  /// the first point, oriented by traversal order).
  double enclosed_solid_angle() const;
  bool step_valid(double max_step_rad = 0.3) const;

  /// Geodesic polygon through the given corners with each edge
  /// subdivided into the given number of arcs.
  static LoopPath geodesic_polygon(const std::vector<Eigen::Vector3d>& corners,
                                   int subdivisions_per_edge);
};

/// Spherical excess of the geodesic triangle with the given (unit)
/// corners: the independent solid-angle oracle used by the holonomy
/// suite.
double spherical_triangle_excess(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                 const Eigen::Vector3d& c);

}  // namespace amcheck
