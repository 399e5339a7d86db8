#pragma once

#include <Eigen/Dense>
#include <complex>

#include "amcheck/diff_operator.hpp"
#include "amcheck/minkowski.hpp"

namespace amcheck {

/// Momentum-space vector potential A^mu = (A0, A) at a lightlike k,
/// with A0 fixed by A^mu k_mu = 0.
struct GaugePotential {
  Eigen::Vector3d k;
  Eigen::Vector3cd A;
  std::complex<double> A0;
};

/// Completes the spatial potential to the gauge condition: A0 = A.k/|k|.
GaugePotential lorentz_gauge_complete(const Eigen::Vector3d& k,
                                      const Eigen::Vector3cd& A);

/// True iff A' - A is complex-proportional to k (cross-product norm test).
bool gauge_equivalent(const Eigen::Vector3d& k, const Eigen::Vector3cd& A,
                      const Eigen::Vector3cd& Ap, double tol = 1e-10);

/// Transverse representative A - (k-hat . A) k-hat; constant on gauge
/// classes and idempotent.
Eigen::Vector3cd coulomb_project(const Eigen::Vector3d& k, const Eigen::Vector3cd& A);

/// Distance between the physical (Coulomb) representatives of the
/// fiber-rotated images of two gauge-equivalent potentials A and
/// A + alpha k. Positive whenever R k is not parallel to k, exhibiting
/// that the fiber rotation does not descend to physical states.
struct SamDescentResult {
  double distance = 0.0;
  bool degenerate = false;  // R fixes the k direction, no counterexample
  Eigen::Vector3cd image_a, image_b;
};

SamDescentResult sam_descent_counterexample(const Eigen::Vector3d& k,
                                            const Eigen::Vector3cd& A,
                                            std::complex<double> alpha,
                                            const Rotation& r);

/// Fiber rotation generators of the rank-3 potential bundle: constant
/// Cartesian spin-1 matrices (the candidate spin triple the descent
/// counterexample disqualifies).
std::array<DiffOperator, 3> gauge_sam_operators(const Domain& domain);

}  // namespace amcheck
