#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace amcheck {

/// Fixed node/weight quadrature on the unit sphere (Gauss-Legendre in
/// cos(theta) crossed with a uniform azimuthal grid); spectrally exact
/// for smooth integrands, weights sum to 4 pi.
struct SphereQuadrature {
  std::vector<Eigen::Vector3d> nodes;
  std::vector<double> weights;
  int n_theta = 0;
};

SphereQuadrature sphere_quadrature(int n_theta);

/// Section of an ambient-space bundle sampled on the quadrature nodes.
struct SampledSection {
  int quad_size = 0;
  std::vector<Eigen::VectorXcd> values;
};

SampledSection sample_section(
    const SphereQuadrature& quad,
    const std::function<Eigen::VectorXcd(const Eigen::Vector3d&)>& section);

/// Quadrature of <psi1(k), psi2(k)> over the unit-sphere slice of
/// momentum space (the invariant measure restricts to the area measure
/// there, up to a constant). Sections must share the quadrature mesh.
std::complex<double> section_inner_product(const SampledSection& a,
                                           const SampledSection& b,
                                           const SphereQuadrature& quad);

}  // namespace amcheck
