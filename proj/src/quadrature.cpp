#include "amcheck/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amcheck {

SphereQuadrature sphere_quadrature(int n_theta) {
  if (n_theta < 1) throw std::invalid_argument("sphere_quadrature: n_theta < 1");
  // Golub-Welsch: Gauss-Legendre nodes/weights from the Jacobi matrix
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n_theta, n_theta);
  for (int i = 1; i < n_theta; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    jac(i, i - 1) = jac(i - 1, i) = b;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  const Eigen::VectorXd ct = es.eigenvalues();           // cos(theta) nodes
  const Eigen::MatrixXd vec = es.eigenvectors();

  SphereQuadrature q;
  q.n_theta = n_theta;
  const int n_phi = 2 * n_theta;
  const double wphi = 2.0 * std::numbers::pi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double w = 2.0 * vec(0, i) * vec(0, i);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct[i] * ct[i]));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = (j + 0.5) * wphi;
      q.nodes.emplace_back(st * std::cos(phi), st * std::sin(phi), ct[i]);
      q.weights.push_back(w * wphi);
    }
  }
  return q;
}

SampledSection sample_section(
    const SphereQuadrature& quad,
    const std::function<Eigen::VectorXcd(const Eigen::Vector3d&)>& section) {
  SampledSection s;
  s.quad_size = static_cast<int>(quad.nodes.size());
  s.values.reserve(quad.nodes.size());
  for (const auto& k : quad.nodes) s.values.push_back(section(k));
  return s;
}

std::complex<double> section_inner_product(const SampledSection& a,
                                           const SampledSection& b,
                                           const SphereQuadrature& quad) {
  const int n = static_cast<int>(quad.nodes.size());
  if (a.quad_size != n || b.quad_size != n)
    throw std::invalid_argument("section_inner_product: quadrature mesh mismatch");
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) acc += quad.weights[i] * a.values[i].dot(b.values[i]);
  return acc;
}

}  // namespace amcheck
