#include "amcheck/representations.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace amcheck {

MassiveSplit build_massive_jsl(int s, double mass) {
  if (mass <= 0.0) throw std::domain_error("build_massive_jsl: mass must be positive");
  const auto sm = spin_matrices(s);
  const int rank = 2 * s + 1;
  const Domain dom = Domain::entire();

  MassiveSplit out;
  out.s = s;
  out.mass = mass;
  for (int n = 0; n < 3; ++n) {
    out.spin.ops[n] = DiffOperator::constant_fiber(sm[n], dom);
    out.orbital.ops[n] = DiffOperator::orbital(n, rank, dom);
    out.total.ops[n] = out.orbital.ops[n] + out.spin.ops[n];
  }
  out.total.label = "J_massive";
  out.spin.label = "S_wigner";
  out.orbital.label = "L_wigner";
  return out;
}

OperatorTriple build_massless_j(int h, ChartId chart) {
  OperatorTriple j;
  if (h == 0) {
    const Domain dom = Domain::punctured();
    for (int n = 0; n < 3; ++n) j.ops[n] = DiffOperator::orbital(n, 1, dom);
    j.label = "J_h0";
    return j;
  }
  const FiberFrame frame = FiberFrame::helicity(h, chart);
  const Domain dom = frame.domain();
  for (int n = 0; n < 3; ++n)
    j.ops[n] = DiffOperator::orbital(n, 1, dom) +
               DiffOperator::fiber_only(frame_connection(frame, n), dom);
  j.label = "J_h" + std::to_string(h);
  return j;
}

HelicitySplit build_parallel_perp(const OperatorTriple& j, int h) {
  HelicitySplit split;
  split.h = h;
  const Domain dom = j.ops[0].domain();
  for (int n = 0; n < 3; ++n) {
    const ScalarField hk = C0(h) * ScalarField::unit_coordinate(n);
    split.parallel.ops[n] = DiffOperator::multiplication(hk, dom);
    split.perp.ops[n] = j.ops[n] - split.parallel.ops[n];
  }
  split.parallel.label = "J_parallel";
  split.perp.label = "J_perp";
  return split;
}

namespace {

constexpr double kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

CommutatorReport pairwise_defects(
    std::span<const DiffOperator> normalizer_ops,
    const std::vector<std::pair<std::pair<int, int>, DiffOperator>>& defects,
    const std::vector<Eigen::Vector3d>& pts, double tol) {
  CommutatorReport rep;
  rep.pairwise = Eigen::MatrixXd::Zero(3, 3);
  rep.sample_points = pts;
  rep.tolerance = tol;
  double scale = 1.0;
  for (const auto& op : normalizer_ops)
    for (const auto& k : pts) scale = std::max(scale, 1.0 + op.coefficient_norm(k));
  for (const auto& [mn, d] : defects) {
    double worst = 0.0;
    for (const auto& k : pts) worst = std::max(worst, d.coefficient_norm(k));
    rep.pairwise(mn.first, mn.second) = worst / scale;
  }
  rep.max_residual = rep.pairwise.maxCoeff();
  rep.samples_used = static_cast<int>(pts.size());
  rep.pass = rep.max_residual < tol;
  return rep;
}

}  // namespace

NonstandardRelationsReport verify_nonstandard_relations(const HelicitySplit& split,
                                                        const SampleSpec& spec,
                                                        double tol,
                                                        double closure_floor) {
  const auto& par = split.parallel.ops;
  const auto& perp = split.perp.ops;
  std::vector<DiffOperator> all(par.begin(), par.end());
  all.insert(all.end(), perp.begin(), perp.end());
  Domain dom = all[0].domain();
  for (const auto& op : all) dom = dom.intersect(op.domain());
  const auto pts = sample_domain(dom, spec);
  const C0 i(0.0, 1.0);

  NonstandardRelationsReport rep;
  rep.closure_floor = closure_floor;

  std::vector<std::pair<std::pair<int, int>, DiffOperator>> d1, d2, d3;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      if (m == n) {
        d1.emplace_back(std::make_pair(m, n), commutator(par[m], par[n]));
        d2.emplace_back(std::make_pair(m, n), commutator(perp[m], par[n]));
        d3.emplace_back(std::make_pair(m, n), commutator(perp[m], perp[n]));
        continue;
      }
      const int p = 3 - m - n;
      const C0 e = i * kEps[m][n][p];
      d1.emplace_back(std::make_pair(m, n), commutator(par[m], par[n]));
      d2.emplace_back(std::make_pair(m, n),
                      commutator(perp[m], par[n]) - e * par[p]);
      d3.emplace_back(std::make_pair(m, n),
                      commutator(perp[m], perp[n]) - e * (perp[p] - par[p]));
    }
  rep.parallel_parallel = pairwise_defects(all, d1, pts, tol);
  rep.perp_parallel = pairwise_defects(all, d2, pts, tol);
  rep.perp_perp = pairwise_defects(all, d3, pts, tol);
  rep.perp_closure = fit_structure_constants(std::span<const DiffOperator>(perp), spec);
  rep.pass = rep.parallel_parallel.pass && rep.perp_parallel.pass &&
             rep.perp_perp.pass && rep.perp_closure.residual > closure_floor;
  return rep;
}

double helicity_eigenvalue_defect(const OperatorTriple& j, int h,
                                  const SampleSpec& spec) {
  const Domain dom = j.ops[0].domain();
  DiffOperator hel = ScalarField::unit_coordinate(0) * j.ops[0];
  for (int n = 1; n < 3; ++n)
    hel = hel + ScalarField::unit_coordinate(n) * j.ops[n];
  const DiffOperator expected =
      C0(h) * DiffOperator::constant_fiber(Eigen::MatrixXcd::Identity(1, 1), dom);
  return max_coefficient_distance(hel, expected, spec);
}

double energy_preservation_defect(const OperatorTriple& t, const SampleSpec& spec) {
  const auto pts = sample_domain(t.ops[0].domain(), spec);
  double worst = 0.0;
  for (const auto& op : t.ops)
    for (const auto& k : pts) {
      const auto c = op.coefficients(k);
      C0 radial(0.0, 0.0);
      for (int a = 0; a < 3; ++a) radial += c.drift[a] * k[a];
      worst = std::max(worst, std::abs(radial));
    }
  return worst;
}

DiffOperator conjugate_by_phase(const DiffOperator& op, const ScalarField& tau) {
  if (op.rank() != 1)
    throw std::invalid_argument("conjugate_by_phase: rank-1 operators only");
  ScalarField shift = ScalarField::zero();
  for (int a = 0; a < 3; ++a) shift = shift + op.drift(a) * tau.partial(a) / tau;
  const MatrixField fiber = op.fiber() - MatrixField::from_scalar(shift);
  return {{op.drift(0), op.drift(1), op.drift(2)}, fiber, op.domain()};
}

namespace {

/// Random degree-2 complex polynomial in k, entries O(amplitude).
ScalarField random_polynomial(std::mt19937_64& rng, double amplitude) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::array<C0, 10> c;
  for (auto& x : c) x = amplitude * C0(u(rng), u(rng));
  return ScalarField::make([c](const auto& p) {
    using S = std::decay_t<decltype(p[0])>;
    S acc = S(c[0]);
    int idx = 1;
    for (int a = 0; a < 3; ++a) acc = acc + S(c[idx++]) * p[a];
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) acc = acc + S(c[idx++]) * p[a] * p[b];
    return acc;
  });
}

}  // namespace

RandomTrialCertificate nogo1_rank1_certificate(int trials, std::uint64_t seed,
                                               double so3_tol, double sup_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logamp(-10.0, 0.0);
  RandomTrialCertificate cert;
  cert.trials = trials;
  const Domain dom = Domain::punctured();
  for (int t = 0; t < trials; ++t) {
    const double amplitude = std::pow(10.0, logamp(rng));
    const std::array<ScalarField, 3> f{random_polynomial(rng, amplitude),
                                       random_polynomial(rng, amplitude),
                                       random_polynomial(rng, amplitude)};
    SampleSpec spec;
    spec.count = 8;
    spec.seed = rng();
    const TrivialityReport rep = scalar_so3_triviality(f, dom, spec, so3_tol,
                                                       sup_tol / so3_tol);
    if (rep.satisfies_so3) {
      ++cert.so3_passing;
      cert.worst_conditional = std::max(cert.worst_conditional, rep.sup_norm);
      if (rep.sup_norm >= sup_tol) ++cert.violations;
    }
  }
  cert.pass = cert.violations == 0 && cert.so3_passing > 0;
  return cert;
}

RandomTrialCertificate nogo1_rank2_casimir_certificate(int trials, std::uint64_t seed,
                                                       double so3_tol,
                                                       double casimir_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logamp(-10.0, 0.0);
  RandomTrialCertificate cert;
  cert.trials = trials;
  const Domain dom = Domain::punctured();
  const C0 i(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const double amplitude = std::pow(10.0, logamp(rng));
    std::array<MatrixField, 3> f;
    for (int n = 0; n < 3; ++n) {
      std::array<ScalarField, 4> e{
          random_polynomial(rng, amplitude), random_polynomial(rng, amplitude),
          random_polynomial(rng, amplitude), random_polynomial(rng, amplitude)};
      f[n] = MatrixField::make(
          [e](const auto& p) {
            using S = std::decay_t<decltype(p[0])>;
            SmallMat<S> m(2, 2);
            m(0, 0) = e[0].eval(p);
            m(0, 1) = e[1].eval(p);
            m(1, 0) = e[2].eval(p);
            m(1, 1) = e[3].eval(p);
            return m;
          },
          2, 2);
    }
    std::array<DiffOperator, 3> ops{DiffOperator::fiber_only(f[0], dom),
                                    DiffOperator::fiber_only(f[1], dom),
                                    DiffOperator::fiber_only(f[2], dom)};
    SampleSpec spec;
    spec.count = 8;
    spec.seed = rng();
    const auto pts = sample_domain(dom, spec);
    double defect = 0.0;
    for (int m = 0; m < 3; ++m)
      for (int n = m + 1; n < 3; ++n) {
        const int p = 3 - m - n;
        const DiffOperator d =
            commutator(ops[m], ops[n]) - (i * kEps[m][n][p]) * ops[p];
        for (const auto& k : pts) defect = std::max(defect, d.coefficient_norm(k));
      }
    if (defect < so3_tol) {
      ++cert.so3_passing;
      double worst_eig = 0.0;
      for (const auto& k : pts) {
        Eigen::Matrix2cd casimir = Eigen::Matrix2cd::Zero();
        for (int n = 0; n < 3; ++n) {
          const Eigen::MatrixXcd fn = f[n].value(k);
          casimir += fn * fn;
        }
        const Eigen::Vector2cd eig =
            casimir.eigenvalues();
        worst_eig = std::max({worst_eig, std::abs(eig(0)), std::abs(eig(1))});
      }
      cert.worst_conditional = std::max(cert.worst_conditional, worst_eig);
      if (worst_eig >= casimir_tol) ++cert.violations;
    }
  }
  cert.pass = cert.violations == 0 && cert.so3_passing > 0;
  return cert;
}

CoefficientRegistry registered_coefficient_fields() {
  CoefficientRegistry reg;
  const Domain punctured = Domain::punctured();
  for (int n = 0; n < 3; ++n) {
    const DiffOperator l = DiffOperator::orbital(n, 1, Domain::entire());
    for (int b = 0; b < 3; ++b)
      if (n != b)
        reg.scalars.push_back({"orbital_drift_" + std::to_string(n) + std::to_string(b),
                               l.drift(b), Domain::entire()});
    reg.scalars.push_back(
        {"unit_coordinate_" + std::to_string(n), ScalarField::unit_coordinate(n),
         punctured});
  }
  reg.scalars.push_back({"radius", ScalarField::radius(), punctured});
  for (const int h : {1, -1, 2, -2}) {
    const FiberFrame north = FiberFrame::helicity(h, ChartId::North);
    for (int n = 0; n < 3; ++n)
      reg.matrices.push_back({"connection_h" + std::to_string(h) + "_" +
                                  std::to_string(n),
                              frame_connection(north, n), north.domain()});
  }
  const FiberFrame n1 = FiberFrame::helicity(1, ChartId::North);
  const FiberFrame s1 = FiberFrame::helicity(1, ChartId::South);
  reg.scalars.push_back({"transition_h1", transition_phase(s1, n1),
                         n1.domain().intersect(s1.domain())});
  const auto spin1 = spin_matrices(1);
  reg.matrices.push_back(
      {"spin1_fiber", MatrixField::constant(spin1[2]), Domain::entire()});
  return reg;
}

std::array<DiffOperator, 3> block_helicity_generators(int h, const Domain& domain) {
  std::array<DiffOperator, 3> ops{DiffOperator::zero(2, domain),
                                  DiffOperator::zero(2, domain),
                                  DiffOperator::zero(2, domain)};
  for (int n = 0; n < 3; ++n) {
    const ScalarField up = C0(h) * ScalarField::unit_coordinate(n);
    const ScalarField down = C0(-h) * ScalarField::unit_coordinate(n);
    ops[n] = DiffOperator::fiber_only(MatrixField::diag2(up, down), domain);
  }
  return ops;
}

}  // namespace amcheck
