#pragma once

#include <array>
#include <span>
#include <vector>

#include "amcheck/smooth_field.hpp"

namespace amcheck {

/// Sampling plan for the residual suites: log-uniform radius, uniform
/// direction, pole cones excluded by the domain. Deterministic in seed.
struct SampleSpec {
  int count = 100;
  std::uint64_t seed = 42;
  double rmin = 0.5;
  double rmax = 2.0;
};

std::vector<Eigen::Vector3d> sample_domain(const Domain& domain, const SampleSpec& spec);

/// First-order differential operator on rank-r bundle sections over a
/// momentum chart,
///   A = sum_a drift_a(k) d/dk_a (x) I_r + fiber(k),
/// the common representation of all generators handled here.
class DiffOperator {
 public:
  /// Zero operator on rank-1 sections of the entire space.
  DiffOperator() : fiber_(MatrixField::zero(1, 1)) {}
  DiffOperator(std::array<ScalarField, 3> drift, MatrixField fiber, Domain domain);

  static DiffOperator zero(int rank, Domain domain);
  /// Orbital generator -i (k x grad)_axis (x) I_rank.
  static DiffOperator orbital(int axis, int rank, Domain domain);
  /// Multiplication by a scalar function on rank-1 sections.
  static DiffOperator multiplication(const ScalarField& f, Domain domain);
  static DiffOperator constant_fiber(const Eigen::MatrixXcd& m, Domain domain);
  static DiffOperator fiber_only(const MatrixField& f, Domain domain);

  int rank() const { return fiber_.rows(); }
  const ScalarField& drift(int a) const { return drift_[a]; }
  const MatrixField& fiber() const { return fiber_; }
  const Domain& domain() const { return domain_; }

  struct Coefficients {
    std::array<C0, 3> drift;
    Eigen::MatrixXcd fiber;
  };
  /// Pointwise coefficients; throws outside the domain.
  Coefficients coefficients(const Eigen::Vector3d& k) const;
  /// l2 norm of all coefficients at k.
  double coefficient_norm(const Eigen::Vector3d& k) const;

  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(C0 c, const DiffOperator& a);
  /// Left multiplication by a function: (f A) psi = f (A psi).
  friend DiffOperator operator*(const ScalarField& f, const DiffOperator& a);

  /// Operator commutator [A,B]; exact coefficients via dual queries.
  friend DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

 private:
  std::array<ScalarField, 3> drift_;
  MatrixField fiber_;
  Domain domain_;
};

/// Residual record for a family of commutator identities.
struct CommutatorReport {
  Eigen::MatrixXd pairwise;  // residual per index pair (m,n)
  double max_residual = 0.0;
  std::vector<Eigen::Vector3d> sample_points;
  int samples_used = 0;
  double tolerance = 0.0;
  bool pass = false;
};

using OperatorTripleRef = std::span<const DiffOperator, 3>;

/// [J_m, J_n] = i eps_{mnp} J_p over the sample set; residual is the
/// max pointwise defect norm over (1 + max coefficient norm).
CommutatorReport check_so3(OperatorTripleRef ops, const SampleSpec& spec, double tol);

/// [V_m, J_n] = i eps_{mnp} V_p (vector-operator condition).
CommutatorReport check_vector_operator(OperatorTripleRef v, OperatorTripleRef j,
                                       const SampleSpec& spec, double tol);

/// All nine [A_m, B_n] = 0.
CommutatorReport check_commuting(OperatorTripleRef a, OperatorTripleRef b,
                                 const SampleSpec& spec, double tol);

/// Least-squares fit of [X_m, X_n] = i c_{mnp} X_p over stacked
/// coefficient evaluations. A small residual certifies closure into a
/// Lie algebra with the fitted structure constants; a residual above
/// the failure floor certifies that no closure exists in the span.
struct ClosureFit {
  int n = 0;
  std::vector<C0> c;  // flattened m*n*n + n*n' + p, antisymmetrized
  double residual = 0.0;
  int samples_used = 0;

  C0 at(int m, int nn, int p) const { return c[(m * n + nn) * n + p]; }
  double max_abs() const;
};

ClosureFit fit_structure_constants(std::span<const DiffOperator> ops,
                                   const SampleSpec& spec);

/// Certificate that rank-1 internal (multiplication) triples satisfying
/// so(3) are trivial: wherever the sampled so(3) defect is below tol,
/// the sup of |F| must be below tol*scale.
struct TrivialityReport {
  bool pass = false;
  bool satisfies_so3 = false;
  double so3_defect = 0.0;
  double sup_norm = 0.0;
  double tol = 0.0;
  double scale = 0.0;
};

TrivialityReport scalar_so3_triviality(const std::array<ScalarField, 3>& f,
                                       const Domain& domain, const SampleSpec& spec,
                                       double tol = 1e-8, double scale = 10.0);

/// Max coefficient distance between two operators on the common domain
/// (extensional equality is distance below tolerance).
double max_coefficient_distance(const DiffOperator& a, const DiffOperator& b,
                                const SampleSpec& spec);

/// Normalized Jacobi-identity defect of a triple.
double jacobi_defect(const DiffOperator& a, const DiffOperator& b,
                     const DiffOperator& c, const SampleSpec& spec);

/// Max relative mismatch between dual-query gradients and central
/// finite differences over the sample set.
double derivative_contract_defect(const ScalarField& f, const Domain& domain,
                                  const SampleSpec& spec, double step = 1e-5);
double derivative_contract_defect(const MatrixField& f, const Domain& domain,
                                  const SampleSpec& spec, double step = 1e-5);

}  // namespace amcheck
