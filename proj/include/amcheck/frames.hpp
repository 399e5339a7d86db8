#pragma once

#include <Eigen/Dense>
#include <memory>

#include "amcheck/minkowski.hpp"
#include "amcheck/smooth_field.hpp"

namespace amcheck {

/// Chart of the punctured momentum space: North is smooth away from
/// k = -|k| z-hat, South away from +|k| z-hat.
enum class ChartId { North, South };

/// How rotations act on the ambient space the frame vectors live in.
enum class AmbientAction { Identity, Vector, TensorSquare };

namespace detail {
struct FrameImpl;
}

/// Smooth assignment k -> orthonormal polarization frame in an ambient
/// complex space, per chart. Encodes the helicity line bundles (and
/// their tensor squares for |h| = 2) plus trivial reference bundles.
class FiberFrame {
 public:
  /// Helicity-h frame, |h| in {1,2}: the circular polarization line
  /// (x-hat + i sign(h) y-hat)/sqrt(2) transported from the chart pole
  /// by minimal rotations; |h| = 2 is its tensor square in C^9.
  static FiberFrame helicity(int h, ChartId chart);
  /// Constant rank-1 frame in C^1 with trivial rotation action (h = 0).
  static FiberFrame trivial_line();
  /// Constant identity frame on C^3 with the vector rotation action.
  static FiberFrame ambient_basis3();
  /// Constant rank-1 frame spanned by a fixed unit ambient vector.
  static FiberFrame constant_line(const Eigen::VectorXcd& e);

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return rank_; }
  int helicity() const { return h_; }
  AmbientAction action() const { return action_; }
  const Domain& domain() const { return domain_; }

  /// Frame matrix at k (ambient_dim x rank, orthonormal columns);
  /// throws outside the chart domain.
  Eigen::MatrixXcd frame(const Eigen::Vector3d& k) const;

  /// Finite rotation in the ambient representation.
  Eigen::MatrixXcd ambient_rotation(const Rotation& r) const;

  std::shared_ptr<const detail::FrameImpl> impl() const { return impl_; }

 private:
  FiberFrame(std::shared_ptr<const detail::FrameImpl> impl, AmbientAction action,
             int ambient_dim, int rank, int h, Domain domain);
  std::shared_ptr<const detail::FrameImpl> impl_;
  AmbientAction action_;
  int ambient_dim_, rank_, h_;
  Domain domain_;
};

/// Frame-comparison unitary e(k)^dagger rho(R) e(R^{-1} k); a unit
/// phase (1x1) for line bundles. Both k and R^{-1}k must lie in the
/// chart domain.
Eigen::MatrixXcd rotate_section_phase(const Rotation& r, const Eigen::Vector3d& k,
                                      const FiberFrame& frame);

/// Fiber term of the rotation generator about the given axis, obtained
/// by dual-number differentiation of the frame-comparison phase along
/// exp(t * rotation) at t = 0.
MatrixField frame_connection(const FiberFrame& frame, int axis);

/// Unimodular transition function <e_a(k), e_b(k)> between two rank-1
/// frames spanning the same line (e.g. South and North helicity frames).
ScalarField transition_phase(const FiberFrame& a, const FiberFrame& b);

/// Pole-safe evaluator assembling a frame value anywhere on the
/// punctured space by picking the chart whose pole is far from k.
/// Per-vertex phase mismatches between charts are harmless in the
/// topology computations, which are invariant under per-point phases.
class FrameAtlas {
 public:
  /// Two-chart atlas of the helicity-h bundle (h != 0).
  explicit FrameAtlas(int h);
  /// Single-chart atlas for a frame that is smooth everywhere.
  explicit FrameAtlas(FiberFrame global);

  int ambient_dim() const;
  int rank() const;
  Eigen::MatrixXcd at(const Eigen::Vector3d& k) const;

 private:
  std::vector<FiberFrame> charts_;
};

}  // namespace amcheck
