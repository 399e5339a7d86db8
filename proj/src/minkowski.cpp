#include "amcheck/minkowski.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amcheck {

namespace {

constexpr double kGroupTol = 1e-12;

double wrap_angle(double a) {
  // branch (-pi, pi]
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return m;
}

}  // namespace

Eigen::Matrix4d minkowski_metric() {
  Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
  eta(0, 0) = -1.0;
  return eta;
}

LorentzTransform::LorentzTransform(const Eigen::Matrix4d& entries) : m_(entries) {
  const Eigen::Matrix4d eta = minkowski_metric();
  const double metric_defect = (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
  if (metric_defect > 1e-12)
    throw std::invalid_argument("LorentzTransform: metric not preserved");
  if (std::abs(m_.determinant() - 1.0) > 1e-11 || m_(0, 0) < 1.0 - 1e-12)
    throw std::invalid_argument("LorentzTransform: not proper orthochronous");
}

LorentzTransform LorentzTransform::identity() {
  return LorentzTransform(Eigen::Matrix4d::Identity());
}

LorentzTransform LorentzTransform::inverse() const {
  // eta Lambda^T eta inverts exactly within the group
  const Eigen::Matrix4d eta = minkowski_metric();
  return LorentzTransform(eta * m_.transpose() * eta);
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& o) const {
  return LorentzTransform(m_ * o.m_);
}

bool LorentzTransform::is_symmetric(double tol) const {
  return (m_ - m_.transpose()).cwiseAbs().maxCoeff() < tol;
}

Rotation::Rotation(Eigen::Matrix3d m, Eigen::Vector3d axis, double angle)
    : m_(std::move(m)), axis_(std::move(axis)), angle_(angle) {}

Rotation Rotation::identity() {
  return {Eigen::Matrix3d::Identity(), Eigen::Vector3d::UnitZ(), 0.0};
}

Rotation Rotation::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n < kGroupTol) throw std::invalid_argument("Rotation: zero axis");
  const Eigen::Vector3d u = axis / n;
  const double a = wrap_angle(angle);
  const Eigen::Matrix3d k = cross_matrix(u);
  const Eigen::Matrix3d m =
      Eigen::Matrix3d::Identity() + std::sin(a) * k + (1.0 - std::cos(a)) * k * k;
  return {m, u, a};
}

Rotation Rotation::from_matrix(const Eigen::Matrix3d& entries) {
  if ((entries.transpose() * entries - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() >
          1e-9 ||
      entries.determinant() < 0.0)
    throw std::invalid_argument("Rotation: matrix not in SO(3)");
  const double c = std::clamp((entries.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(c);
  Eigen::Vector3d axis;
  if (angle < 1e-7) {
    axis = Eigen::Vector3d::UnitZ();  // near identity: axis irrelevant
  } else if (angle > std::numbers::pi - 1e-7) {
    // R ~ 2 uu^T - I; take the dominant column of (R + I)/2
    const Eigen::Matrix3d b = (entries + Eigen::Matrix3d::Identity()) / 2.0;
    int j;
    b.diagonal().maxCoeff(&j);
    axis = b.col(j) / std::sqrt(b(j, j));
    // fix an orientation so the result is deterministic
    if (axis.z() < 0 || (axis.z() == 0 && axis.y() < 0) ||
        (axis.z() == 0 && axis.y() == 0 && axis.x() < 0))
      axis = -axis;
  } else {
    axis = Eigen::Vector3d(entries(2, 1) - entries(1, 2), entries(0, 2) - entries(2, 0),
                           entries(1, 0) - entries(0, 1)) /
           (2.0 * std::sin(angle));
  }
  axis.normalize();
  return {entries, axis, angle};
}

Rotation Rotation::about_x(double angle) {
  return from_axis_angle(Eigen::Vector3d::UnitX(), angle);
}
Rotation Rotation::about_y(double angle) {
  return from_axis_angle(Eigen::Vector3d::UnitY(), angle);
}
Rotation Rotation::about_z(double angle) {
  return from_axis_angle(Eigen::Vector3d::UnitZ(), angle);
}

Rotation Rotation::minimal(const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
  const Eigen::Vector3d a = from.normalized();
  const Eigen::Vector3d b = to.normalized();
  const double c = a.dot(b);
  if (c < -1.0 + 1e-12) {
    // antipodal: no minimal choice; use a half-turn about any
    // perpendicular axis, preferring x-hat
    Eigen::Vector3d perp = a.cross(Eigen::Vector3d::UnitX());
    if (perp.norm() < 1e-6) perp = a.cross(Eigen::Vector3d::UnitY());
    return from_axis_angle(perp, std::numbers::pi);
  }
  const Eigen::Vector3d w = a.cross(b);
  const Eigen::Matrix3d k = cross_matrix(w);
  const Eigen::Matrix3d m = Eigen::Matrix3d::Identity() + k + k * k / (1.0 + c);
  return from_matrix(m);
}

bool Rotation::is_identity(double tol) const {
  return (m_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < tol;
}

Rotation Rotation::operator*(const Rotation& o) const {
  return from_matrix(m_ * o.m_);
}

Rotation Rotation::inverse() const { return from_matrix(m_.transpose()); }

LorentzTransform Rotation::embed() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(1, 1) = m_;
  return LorentzTransform(m);
}

MomentumPoint::MomentumPoint(const Eigen::Vector3d& k_, double mass_)
    : k(k_), mass(mass_) {
  if (mass < 0.0) throw std::domain_error("MomentumPoint: negative mass");
  if (mass == 0.0 && k.norm() == 0.0)
    throw std::domain_error("MomentumPoint: massless momentum excludes the origin");
}

FourVector standard_momentum(const MomentumPoint& p) {
  if (p.mass > 0.0) return {p.mass, 0, 0, 0};
  return {1, 0, 0, 1};
}

LorentzTransform boost_to(const MomentumPoint& p) {
  if (p.mass <= 0.0)
    throw std::domain_error("boost_to: massless particles have no rest frame");
  const double m = p.mass;
  const double omega = p.energy();
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b(0, 0) = omega / m;
  for (int i = 0; i < 3; ++i) {
    b(0, i + 1) = b(i + 1, 0) = p.k[i] / m;
    for (int j = 0; j < 3; ++j) b(i + 1, j + 1) += p.k[i] * p.k[j] / (m * (omega + m));
  }
  return LorentzTransform(b);
}

LorentzTransform standard_boost_lightlike(const MomentumPoint& p) {
  if (p.mass != 0.0)
    throw std::domain_error("standard_boost_lightlike: massive momentum");
  const double r = p.k.norm();
  if (r <= 0.0) throw std::domain_error("standard_boost_lightlike: |k| = 0");
  const double chi = std::log(r);
  Eigen::Matrix4d bz = Eigen::Matrix4d::Identity();
  bz(0, 0) = bz(3, 3) = std::cosh(chi);
  bz(0, 3) = bz(3, 0) = std::sinh(chi);
  const Rotation align = Rotation::minimal(Eigen::Vector3d::UnitZ(), p.k);
  return align.embed() * LorentzTransform(bz);
}

LorentzTransform standard_boost(const MomentumPoint& p) {
  return p.mass > 0.0 ? boost_to(p) : standard_boost_lightlike(p);
}

LorentzTransform little_group_element(const LorentzTransform& lambda,
                                      const MomentumPoint& p) {
  const FourVector q = lambda.apply(p.four_momentum());
  const MomentumPoint lp(q.spatial(), p.mass);
  return standard_boost(lp).inverse() * lambda * standard_boost(p);
}

LorentzTransform iso2_embed(const Iso2Element& e) {
  const double zeta = (e.alpha * e.alpha + e.beta * e.beta) / 2.0;
  Eigen::Matrix4d s;
  s << 1 + zeta, e.alpha, e.beta, -zeta,    //
      e.alpha, 1, 0, -e.alpha,              //
      e.beta, 0, 1, -e.beta,                //
      zeta, e.alpha, e.beta, 1 - zeta;
  return LorentzTransform(s) * Rotation::about_z(e.theta).embed();
}

Iso2Element decompose_iso2(const LorentzTransform& w) {
  const FourVector ref{1, 0, 0, 1};
  const FourVector fixed = w.apply(ref);
  if ((fixed.coords() - ref.coords()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("decompose_iso2: input does not fix (1,0,0,1)");
  // W (1,0,0,-1) exposes the translation parameters
  const Eigen::Vector4d v = w.matrix() * Eigen::Vector4d(1, 0, 0, -1);
  Iso2Element e;
  e.alpha = v[1] / 2.0;
  e.beta = v[2] / 2.0;
  const LorentzTransform residual =
      iso2_embed({0.0, -e.alpha, -e.beta}) * w;  // pure z-rotation remains
  e.theta = std::atan2(residual.matrix()(2, 1), residual.matrix()(1, 1));
  return e;
}

std::optional<Eigen::Vector3d> axis_of_rotation(const Rotation& r) {
  if (r.is_identity(1e-12)) return std::nullopt;
  return r.axis();
}

}  // namespace amcheck
