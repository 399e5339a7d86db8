#pragma once

#include <Eigen/Dense>
#include <optional>

namespace amcheck {

/// Minkowski four-vector, signature (-,+,+,+), components (t, x, y, z).
struct FourVector {
  double t = 0, x = 0, y = 0, z = 0;

  double norm2() const { return -t * t + x * x + y * y + z * z; }
  Eigen::Vector4d coords() const { return {t, x, y, z}; }
  Eigen::Vector3d spatial() const { return {x, y, z}; }
  static FourVector from_coords(const Eigen::Vector4d& c) {
    return {c[0], c[1], c[2], c[3]};
  }
};

Eigen::Matrix4d minkowski_metric();

/// Proper orthochronous Lorentz transform. The constructor validates
/// metric preservation, det = +1 and time orientation.
class LorentzTransform {
 public:
  explicit LorentzTransform(const Eigen::Matrix4d& entries);
  static LorentzTransform identity();

  const Eigen::Matrix4d& matrix() const { return m_; }
  FourVector apply(const FourVector& v) const {
    return FourVector::from_coords(m_ * v.coords());
  }
  LorentzTransform inverse() const;
  LorentzTransform operator*(const LorentzTransform& o) const;
  bool is_symmetric(double tol = 1e-12) const;

 private:
  Eigen::Matrix4d m_;
};

/// SO(3) rotation with cached axis-angle form; angle in (-pi, pi].
class Rotation {
 public:
  static Rotation identity();
  static Rotation from_axis_angle(const Eigen::Vector3d& axis, double angle);
  static Rotation from_matrix(const Eigen::Matrix3d& entries);
  static Rotation about_x(double angle);
  static Rotation about_y(double angle);
  static Rotation about_z(double angle);
  /// Minimal (geodesic) rotation taking unit vector `from` to unit
  /// vector `to`; undefined at antipodes, where a half-turn about x
  /// (or y) is substituted deterministically.
  static Rotation minimal(const Eigen::Vector3d& from, const Eigen::Vector3d& to);

  const Eigen::Matrix3d& matrix() const { return m_; }
  const Eigen::Vector3d& axis() const { return axis_; }
  double angle() const { return angle_; }
  bool is_identity(double tol = 1e-12) const;

  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return m_ * v; }
  Rotation operator*(const Rotation& o) const;
  Rotation inverse() const;
  /// Embeds as a spatial Lorentz transform (identity on t).
  LorentzTransform embed() const;

 private:
  Rotation(Eigen::Matrix3d m, Eigen::Vector3d axis, double angle);
  Eigen::Matrix3d m_;
  Eigen::Vector3d axis_;
  double angle_;
};

/// On-shell momentum: mass >= 0, and |k| > 0 when massless (the
/// lightcone excludes the origin).
struct MomentumPoint {
  Eigen::Vector3d k;
  double mass;

  MomentumPoint(const Eigen::Vector3d& k_, double mass_);
  double energy() const { return std::sqrt(mass * mass + k.squaredNorm()); }
  FourVector four_momentum() const {
    return {energy(), k.x(), k.y(), k.z()};
  }
};

/// ISO(2) little-group parameters: rotation angle theta in (-pi, pi]
/// plus the two null-translation parameters.
struct Iso2Element {
  double theta = 0, alpha = 0, beta = 0;
};

/// Reference momenta fixed by the little groups: (m,0,0,0) for mass m,
/// (1,0,0,1) on the lightcone.
FourVector standard_momentum(const MomentumPoint& p);

/// Pure boost taking (m,0,0,0) to (omega, k); requires m > 0.
LorentzTransform boost_to(const MomentumPoint& p);

/// Standard lightlike boost: z-boost to |k| followed by the minimal
/// rotation taking z-hat to k-hat. Maps (1,0,0,1) to (|k|, k); smooth
/// away from the -z axis.
LorentzTransform standard_boost_lightlike(const MomentumPoint& p);

/// Dispatches on mass to the appropriate standard boost L(p).
LorentzTransform standard_boost(const MomentumPoint& p);

/// Wigner little-group element W = L(Lambda p)^{-1} Lambda L(p); fixes
/// the standard momentum of p's mass shell.
LorentzTransform little_group_element(const LorentzTransform& lambda,
                                      const MomentumPoint& p);

/// Embedding of ISO(2) into the Lorentz group as the stabilizer of
/// (1,0,0,1): null translation S(alpha,beta) composed with R_z(theta).
LorentzTransform iso2_embed(const Iso2Element& e);

/// Inverse of iso2_embed; requires W to fix (1,0,0,1) to 1e-10.
Iso2Element decompose_iso2(const LorentzTransform& w);

/// Unit fixed point of a nonidentity rotation on the sphere (the two
/// fixed points are +/- the returned axis). nullopt for the identity,
/// where every point is fixed.
std::optional<Eigen::Vector3d> axis_of_rotation(const Rotation& r);

}  // namespace amcheck
