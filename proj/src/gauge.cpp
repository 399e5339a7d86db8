#include "amcheck/gauge.hpp"

#include "amcheck/spin_matrices.hpp"

namespace amcheck {

GaugePotential lorentz_gauge_complete(const Eigen::Vector3d& k,
                                      const Eigen::Vector3cd& A) {
  const double omega = k.norm();
  if (omega <= 0.0) throw std::domain_error("lorentz_gauge_complete: |k| = 0");
  GaugePotential g;
  g.k = k;
  g.A = A;
  // unconjugated contraction A.k (the gauge condition is bilinear)
  std::complex<double> ak(0.0, 0.0);
  for (int i = 0; i < 3; ++i) ak += A[i] * k[i];
  g.A0 = ak / omega;
  return g;
}

bool gauge_equivalent(const Eigen::Vector3d& k, const Eigen::Vector3cd& A,
                      const Eigen::Vector3cd& Ap, double tol) {
  if (k.norm() <= 0.0) throw std::domain_error("gauge_equivalent: |k| = 0");
  const Eigen::Vector3cd d = Ap - A;
  const Eigen::Vector3cd khat = (k / k.norm()).cast<std::complex<double>>();
  const Eigen::Vector3cd cross = d.cross(khat);
  return cross.norm() <= tol * (1.0 + d.norm());
}

Eigen::Vector3cd coulomb_project(const Eigen::Vector3d& k, const Eigen::Vector3cd& A) {
  if (k.norm() <= 0.0) throw std::domain_error("coulomb_project: |k| = 0");
  const Eigen::Vector3d khat = k / k.norm();
  // unconjugated contraction: the projection must shift by alpha k
  // under A -> A + alpha k for complex alpha
  std::complex<double> along(0.0, 0.0);
  for (int i = 0; i < 3; ++i) along += khat[i] * A[i];
  return A - along * khat.cast<std::complex<double>>();
}

SamDescentResult sam_descent_counterexample(const Eigen::Vector3d& k,
                                            const Eigen::Vector3cd& A,
                                            std::complex<double> alpha,
                                            const Rotation& r) {
  SamDescentResult out;
  const Eigen::Vector3cd kc = k.cast<std::complex<double>>();
  const Eigen::Matrix3cd rot = r.matrix().cast<std::complex<double>>();
  out.image_a = coulomb_project(k, rot * A);
  out.image_b = coulomb_project(k, rot * (A + alpha * kc));
  out.distance = (out.image_a - out.image_b).norm();
  const Eigen::Vector3d rk = r.apply(k);
  out.degenerate = rk.cross(k).norm() <= 1e-12 * k.squaredNorm();
  return out;
}

std::array<DiffOperator, 3> gauge_sam_operators(const Domain& domain) {
  const auto g = spin1_cartesian();
  return {DiffOperator::constant_fiber(g[0], domain),
          DiffOperator::constant_fiber(g[1], domain),
          DiffOperator::constant_fiber(g[2], domain)};
}

}  // namespace amcheck
