#pragma once

#include <string>

#include "amcheck/diff_operator.hpp"
#include "amcheck/frames.hpp"
#include "amcheck/spin_matrices.hpp"

namespace amcheck {

/// Three operator components sharing rank and domain.
struct OperatorTriple {
  std::array<DiffOperator, 3> ops;
  std::string label;

  const DiffOperator& operator[](int i) const { return ops[i]; }
  OperatorTripleRef ref() const { return OperatorTripleRef(ops); }
};

/// Total / spin / orbital rotation generators of a massive spin-s
/// particle in the basis labeling fibers by rest-frame polarizations:
/// spin is the constant matrix triple (internal, zero drift), orbital
/// is -i k x grad (external, zero fiber), total is their sum.
struct MassiveSplit {
  OperatorTriple total, spin, orbital;
  int s = 0;
  double mass = 0;
};

MassiveSplit build_massive_jsl(int s, double mass);

/// Total rotation generator on the helicity-h line bundle in the given
/// chart: orbital part plus the frame-connection fiber term, which
/// makes so(3) hold exactly and gives J.k-hat eigenvalue h on the frame
/// section. h = 0 yields the purely orbital generator.
OperatorTriple build_massless_j(int h, ChartId chart);

/// The proposed split J = J_par + J_perp, with J_par = (J.k-hat) k-hat
/// realized as multiplication by h k-hat.
struct HelicitySplit {
  OperatorTriple parallel, perp;
  int h = 0;
};

HelicitySplit build_parallel_perp(const OperatorTriple& j, int h);

/// Certifies the three commutation identities of the split —
///   [par_m, par_n] = 0
///   [perp_m, par_n] = i eps_{mnp} par_p
///   [perp_m, perp_n] = i eps_{mnp} (perp_p - par_p)
/// — and that the perp triple does not close into any Lie algebra
/// (structure-constant fit residual above the failure floor).
struct NonstandardRelationsReport {
  CommutatorReport parallel_parallel;
  CommutatorReport perp_parallel;
  CommutatorReport perp_perp;
  ClosureFit perp_closure;
  double closure_floor = 0.1;
  bool pass = false;
};

NonstandardRelationsReport verify_nonstandard_relations(const HelicitySplit& split,
                                                        const SampleSpec& spec,
                                                        double tol,
                                                        double closure_floor = 0.1);

/// Max defect of sum_n k-hat_n J_n = h over the sample set.
double helicity_eigenvalue_defect(const OperatorTriple& j, int h,
                                  const SampleSpec& spec);

/// Max defect of drift(k).k = 0 (energy preservation: drifts tangent to
/// the momentum spheres).
double energy_preservation_defect(const OperatorTriple& t, const SampleSpec& spec);

/// Conjugates a rank-1 operator by a unimodular multiplication phase:
/// tau A tau^{-1}. Used to verify chart independence of the massless
/// generators across the transition function.
DiffOperator conjugate_by_phase(const DiffOperator& op, const ScalarField& tau);

/// Randomized certificates for the triviality of internal so(3) triples
/// on rank-1 and rank-2 fibers. A trial passes when it either fails
/// so(3) (vacuous) or is bounded by the conditional tolerance.
struct RandomTrialCertificate {
  int trials = 0;
  int so3_passing = 0;
  int violations = 0;
  double worst_conditional = 0.0;  // sup-norm or Casimir bound among so(3)-passing
  bool pass = false;
};

RandomTrialCertificate nogo1_rank1_certificate(int trials, std::uint64_t seed,
                                               double so3_tol = 1e-8,
                                               double sup_tol = 1e-7);

RandomTrialCertificate nogo1_rank2_casimir_certificate(int trials, std::uint64_t seed,
                                                       double so3_tol = 1e-8,
                                                       double casimir_tol = 1e-7);

/// Block-diagonal generators diag(h k-hat_n, -h k-hat_n) on the rank-2
/// direct sum of opposite helicities; these commute and therefore fail
/// so(3), which the suites assert.
std::array<DiffOperator, 3> block_helicity_generators(int h, const Domain& domain);

/// Every coefficient field the suites rely on, by name, for the
/// derivative-contract audit (dual queries vs central differences).
struct NamedScalarField {
  std::string name;
  ScalarField field;
  Domain domain;
};
struct NamedMatrixField {
  std::string name;
  MatrixField field;
  Domain domain;
};
struct CoefficientRegistry {
  std::vector<NamedScalarField> scalars;
  std::vector<NamedMatrixField> matrices;
};
CoefficientRegistry registered_coefficient_fields();

}  // namespace amcheck
