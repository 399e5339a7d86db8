#pragma once

#include <complex>
#include <functional>
#include <span>

#include "amcheck/frames.hpp"
#include "amcheck/mesh.hpp"

namespace amcheck {

/// Lattice Chern number output. The rounding guard and the plaquette
/// admissibility bound certify that the integer is trustworthy.
struct ChernResult {
  int chern = 0;
  double total_flux = 0.0;        // before division by 2 pi and rounding
  double max_plaquette_flux = 0.0;
  int mesh_level = 0;
};

/// Lattice field-strength Chern number of a rank-1 frame: per oriented
/// face (i,j,l) the flux is arg(<e_i,e_j><e_j,e_l><e_l,e_i>) using
/// ambient inner products (chart-independent); the sum over faces is
/// 2 pi C. Throws a refine-mesh error if any |flux| >= pi, and a guard
/// error if the total is further than 0.01 from an integer multiple.
ChernResult chern_number(const FrameAtlas& frame, const SphericalMesh& mesh);

/// Chern number of a direct sum of rank-1 frames via arg-det of the
/// overlap Gram matrices around each face.
ChernResult whitney_sum_chern(std::span<const FrameAtlas> frames,
                              const SphericalMesh& mesh);

/// Discrete Berry holonomy: product of normalized overlaps
/// <e(k_i), e(k_{i+1})> around the closed loop.
std::complex<double> berry_holonomy(const FrameAtlas& frame, const LoopPath& loop);

/// Faces of the mesh whose centroid satisfies the predicate, plus the
/// oriented boundary loop of that region (must be a single cycle).
struct MeshRegion {
  std::vector<int> faces;
  LoopPath boundary;
};
MeshRegion select_region(const SphericalMesh& mesh,
                         const std::function<bool(const Eigen::Vector3d&)>& pred);

/// Sum of plaquette fluxes over a face subset (same convention as
/// chern_number).
double region_flux(const FrameAtlas& frame, const SphericalMesh& mesh,
                   std::span<const int> faces);

/// A rotation action on a bundle over the sphere: apply(R, k, v) maps
/// fiber vectors at k (columns of v) to fiber vectors at R k.
struct BundleRotationAction {
  int ambient_dim = 0;
  int rank = 0;
  std::function<Eigen::MatrixXcd(const Rotation&, const Eigen::Vector3d&,
                                 const Eigen::MatrixXcd&)>
      apply;

  /// Action of the helicity bundle (ambient rotation matrices).
  static BundleRotationAction from_frame(const FiberFrame& frame);
  /// Trivial line bundle moved by pure base rotation: v unchanged.
  static BundleRotationAction trivial_line();
  /// Full ambient C^3 with v -> R v: the stabilizer of any k acts
  /// nontrivially on the transverse polarizations, so this is not
  /// external.
  static BundleRotationAction ambient_vector();
  /// Constant-coordinate transport on C^3 (external; trivializes).
  static BundleRotationAction ambient_constant();
};

/// Builds candidate global sections f_j(k) = action(G_k)(k0, v_j) from
/// the minimal rotations G_k: k0 -> k, and measures how far the
/// construction is from well-defined by re-running it through
/// stabilizer-twisted elements G_k R_{k0}(theta). A residual near zero
/// certifies an external action (and hence a global frame); a residual
/// bounded away from zero exhibits the little-group obstruction.
struct FrameConstructionResult {
  double residual = 0.0;
  double min_gram_det = 0.0;  // linear independence of the sections
  int vertices_used = 0;
  std::vector<int> excluded_vertices;  // antipodal to k0
  std::vector<Eigen::MatrixXcd> sections;
};

FrameConstructionResult external_frame_construction(
    const BundleRotationAction& action, const Eigen::Vector3d& k0,
    const Eigen::MatrixXcd& basis, const SphericalMesh& mesh,
    std::span<const double> stabilizer_angles);

/// Default stabilizer probe angles (includes pi and pi/2 so every
/// nonzero helicity phase is exposed).
std::vector<double> default_stabilizer_angles(std::uint64_t seed, int extra = 4);

}  // namespace amcheck
