#include "amcheck/diff_operator.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <random>

namespace amcheck {

namespace {

constexpr double kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

int third_index(int m, int n) { return 3 - m - n; }

Domain common_domain(std::span<const DiffOperator> ops) {
  Domain d = ops[0].domain();
  for (size_t i = 1; i < ops.size(); ++i) d = d.intersect(ops[i].domain());
  return d;
}

double max_coefficient_norm(std::span<const DiffOperator> ops,
                            const std::vector<Eigen::Vector3d>& pts) {
  double m = 0.0;
  for (const auto& op : ops)
    for (const auto& k : pts) m = std::max(m, op.coefficient_norm(k));
  return m;
}

}  // namespace

std::vector<Eigen::Vector3d> sample_domain(const Domain& domain,
                                           const SampleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample_domain: empty sample set");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(spec.count);
  while (static_cast<int>(pts.size()) < spec.count) {
    const double cz = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    const double r =
        std::exp(std::log(spec.rmin) +
                 unit(rng) * (std::log(spec.rmax) - std::log(spec.rmin)));
    const Eigen::Vector3d k(r * sz * std::cos(phi), r * sz * std::sin(phi), r * cz);
    if (domain.contains(k)) pts.push_back(k);
  }
  return pts;
}

DiffOperator::DiffOperator(std::array<ScalarField, 3> drift, MatrixField fiber,
                           Domain domain)
    : drift_(std::move(drift)), fiber_(std::move(fiber)), domain_(domain) {
  if (fiber_.rows() != fiber_.cols())
    throw std::invalid_argument("DiffOperator: fiber term must be square");
}

DiffOperator DiffOperator::zero(int rank, Domain domain) {
  return {{ScalarField::zero(), ScalarField::zero(), ScalarField::zero()},
          MatrixField::zero(rank, rank), domain};
}

DiffOperator DiffOperator::orbital(int axis, int rank, Domain domain) {
  const C0 mi(0.0, -1.0);
  std::array<ScalarField, 3> drift;
  for (int b = 0; b < 3; ++b) {
    ScalarField s = ScalarField::zero();
    for (int a = 0; a < 3; ++a)
      if (kEps[axis][a][b] != 0.0)
        s = s + C0(kEps[axis][a][b]) * ScalarField::coordinate(a);
    drift[b] = mi * s;
  }
  return {drift, MatrixField::zero(rank, rank), domain};
}

DiffOperator DiffOperator::multiplication(const ScalarField& f, Domain domain) {
  return fiber_only(MatrixField::from_scalar(f), domain);
}

DiffOperator DiffOperator::constant_fiber(const Eigen::MatrixXcd& m, Domain domain) {
  return fiber_only(MatrixField::constant(m), domain);
}

DiffOperator DiffOperator::fiber_only(const MatrixField& f, Domain domain) {
  return {{ScalarField::zero(), ScalarField::zero(), ScalarField::zero()}, f, domain};
}

DiffOperator::Coefficients DiffOperator::coefficients(const Eigen::Vector3d& k) const {
  if (!domain_.contains(k))
    throw std::domain_error("DiffOperator: evaluation outside domain");
  Coefficients c{{drift_[0].value(k), drift_[1].value(k), drift_[2].value(k)},
                 fiber_.value(k)};
  return c;
}

double DiffOperator::coefficient_norm(const Eigen::Vector3d& k) const {
  const Coefficients c = coefficients(k);
  double s = c.fiber.squaredNorm();
  for (const auto& d : c.drift) s += std::norm(d);
  return std::sqrt(s);
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("DiffOperator: rank mismatch");
  return {{a.drift_[0] + b.drift_[0], a.drift_[1] + b.drift_[1],
           a.drift_[2] + b.drift_[2]},
          a.fiber_ + b.fiber_,
          a.domain_.intersect(b.domain_)};
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
  return a + (C0(-1.0) * b);
}

DiffOperator operator*(C0 c, const DiffOperator& a) {
  return {{c * a.drift_[0], c * a.drift_[1], c * a.drift_[2]}, c * a.fiber_, a.domain_};
}

DiffOperator operator*(const ScalarField& f, const DiffOperator& a) {
  return {{f * a.drift_[0], f * a.drift_[1], f * a.drift_[2]}, f * a.fiber_, a.domain_};
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("commutator: rank mismatch");
  const Domain dom = a.domain_.intersect(b.domain_);

  std::array<ScalarField, 3> drift;
  for (int bx = 0; bx < 3; ++bx) {
    ScalarField s = ScalarField::zero();
    for (int ax = 0; ax < 3; ++ax)
      s = s + a.drift_[ax] * b.drift_[bx].partial(ax) -
          b.drift_[ax] * a.drift_[bx].partial(ax);
    drift[bx] = s;
  }

  MatrixField fib = matrix_commutator(a.fiber_, b.fiber_);
  for (int ax = 0; ax < 3; ++ax)
    fib = fib + a.drift_[ax] * b.fiber_.partial(ax) -
          b.drift_[ax] * a.fiber_.partial(ax);

  return {drift, fib, dom};
}

namespace {

/// Pointwise norm of the defect operator of one identity, maximized
/// over samples and normalized by (1 + max input coefficient norm).
CommutatorReport run_pairwise(
    std::span<const DiffOperator> normalizer_ops,
    const std::vector<std::pair<std::pair<int, int>, DiffOperator>>& defects,
    const std::vector<Eigen::Vector3d>& pts, double tol, int dim) {
  CommutatorReport rep;
  rep.pairwise = Eigen::MatrixXd::Zero(dim, dim);
  rep.sample_points = pts;
  rep.tolerance = tol;
  const double scale = 1.0 + max_coefficient_norm(normalizer_ops, pts);
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

CommutatorReport check_so3(OperatorTripleRef ops, const SampleSpec& spec, double tol) {
  const auto pts = sample_domain(common_domain(ops), spec);
  const C0 i(0.0, 1.0);
  std::vector<std::pair<std::pair<int, int>, DiffOperator>> defects;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      if (m == n) continue;
      const int p = third_index(m, n);
      defects.emplace_back(std::make_pair(m, n),
                           commutator(ops[m], ops[n]) - (i * kEps[m][n][p]) * ops[p]);
    }
  return run_pairwise(ops, defects, pts, tol, 3);
}

CommutatorReport check_vector_operator(OperatorTripleRef v, OperatorTripleRef j,
                                       const SampleSpec& spec, double tol) {
  std::vector<DiffOperator> all(v.begin(), v.end());
  all.insert(all.end(), j.begin(), j.end());
  const auto pts = sample_domain(common_domain(all), spec);
  const C0 i(0.0, 1.0);
  std::vector<std::pair<std::pair<int, int>, DiffOperator>> defects;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      if (m == n) continue;
      const int p = third_index(m, n);
      defects.emplace_back(std::make_pair(m, n),
                           commutator(v[m], j[n]) - (i * kEps[m][n][p]) * v[p]);
    }
  // diagonal pairs: [V_m, J_m] must vanish
  for (int m = 0; m < 3; ++m)
    defects.emplace_back(std::make_pair(m, m), commutator(v[m], j[m]));
  return run_pairwise(all, defects, pts, tol, 3);
}

CommutatorReport check_commuting(OperatorTripleRef a, OperatorTripleRef b,
                                 const SampleSpec& spec, double tol) {
  std::vector<DiffOperator> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const auto pts = sample_domain(common_domain(all), spec);
  std::vector<std::pair<std::pair<int, int>, DiffOperator>> defects;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      defects.emplace_back(std::make_pair(m, n), commutator(a[m], b[n]));
  return run_pairwise(all, defects, pts, tol, 3);
}

double ClosureFit::max_abs() const {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

ClosureFit fit_structure_constants(std::span<const DiffOperator> ops,
                                   const SampleSpec& spec) {
  const int n = static_cast<int>(ops.size());
  if (n < 2) throw std::invalid_argument("fit_structure_constants: need >= 2 operators");
  const auto pts = sample_domain(common_domain(ops), spec);
  const double opscale = max_coefficient_norm(ops, pts);
  if (opscale < 1e-14)
    throw std::invalid_argument("fit_structure_constants: degenerate (all-zero) input");
  const double norm = 1.0 + opscale;

  const int r = ops[0].rank();
  const int slots = 3 + r * r;  // coefficients per sample point
  const int rows = static_cast<int>(pts.size()) * slots;

  // basis matrix: column p holds i * coefficients of ops[p]
  Eigen::MatrixXcd basis(rows, n);
  const C0 i(0.0, 1.0);
  for (int p = 0; p < n; ++p) {
    int row = 0;
    for (const auto& k : pts) {
      const auto c = ops[p].coefficients(k);
      for (int a = 0; a < 3; ++a) basis(row++, p) = i * c.drift[a];
      for (int u = 0; u < r; ++u)
        for (int v = 0; v < r; ++v) basis(row++, p) = i * c.fiber(u, v);
    }
  }
  const auto svd = basis.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV);

  ClosureFit fit;
  fit.n = n;
  fit.c.assign(static_cast<size_t>(n) * n * n, C0(0.0));
  fit.samples_used = static_cast<int>(pts.size());

  double worst = 0.0;
  for (int m = 0; m < n; ++m)
    for (int nn = m + 1; nn < n; ++nn) {
      const DiffOperator com = commutator(ops[m], ops[nn]);
      Eigen::VectorXcd rhs(rows);
      int row = 0;
      for (const auto& k : pts) {
        const auto c = com.coefficients(k);
        for (int a = 0; a < 3; ++a) rhs(row++) = c.drift[a];
        for (int u = 0; u < r; ++u)
          for (int v = 0; v < r; ++v) rhs(row++) = c.fiber(u, v);
      }
      const Eigen::VectorXcd sol = svd.solve(rhs);
      const Eigen::VectorXcd misfit = basis * sol - rhs;
      // blockwise max over samples, same normalization as check_so3
      for (size_t s = 0; s < pts.size(); ++s) {
        const double block = misfit.segment(s * slots, slots).norm();
        worst = std::max(worst, block / norm);
      }
      for (int p = 0; p < n; ++p) {
        fit.c[(m * n + nn) * n + p] = sol(p);
        fit.c[(nn * n + m) * n + p] = -sol(p);
      }
    }
  fit.residual = worst;
  return fit;
}

TrivialityReport scalar_so3_triviality(const std::array<ScalarField, 3>& f,
                                       const Domain& domain, const SampleSpec& spec,
                                       double tol, double scale) {
  std::array<DiffOperator, 3> ops{DiffOperator::multiplication(f[0], domain),
                                  DiffOperator::multiplication(f[1], domain),
                                  DiffOperator::multiplication(f[2], domain)};
  const auto pts = sample_domain(domain, spec);
  const C0 i(0.0, 1.0);
  std::vector<DiffOperator> defects;
  for (int m = 0; m < 3; ++m)
    for (int n = m + 1; n < 3; ++n) {
      const int p = third_index(m, n);
      defects.push_back(commutator(ops[m], ops[n]) - (i * kEps[m][n][p]) * ops[p]);
    }

  TrivialityReport rep;
  rep.tol = tol;
  rep.scale = scale;
  for (const auto& k : pts) {
    for (const auto& d : defects)
      rep.so3_defect = std::max(rep.so3_defect, d.coefficient_norm(k));
    for (const auto& op : ops)
      rep.sup_norm = std::max(rep.sup_norm, op.coefficient_norm(k));
  }
  rep.satisfies_so3 = rep.so3_defect < tol;
  // the certified implication: so(3) within tol forces triviality
  rep.pass = !rep.satisfies_so3 || rep.sup_norm < tol * scale;
  return rep;
}

double max_coefficient_distance(const DiffOperator& a, const DiffOperator& b,
                                const SampleSpec& spec) {
  const DiffOperator d = a - b;
  const auto pts = sample_domain(d.domain(), spec);
  double worst = 0.0;
  for (const auto& k : pts) worst = std::max(worst, d.coefficient_norm(k));
  return worst;
}

double jacobi_defect(const DiffOperator& a, const DiffOperator& b,
                     const DiffOperator& c, const SampleSpec& spec) {
  const DiffOperator total = commutator(a, commutator(b, c)) +
                             commutator(b, commutator(c, a)) +
                             commutator(c, commutator(a, b));
  const auto pts = sample_domain(total.domain(), spec);
  const std::array<DiffOperator, 3> ops{a, b, c};
  const double norm = 1.0 + max_coefficient_norm(ops, pts);
  double worst = 0.0;
  for (const auto& k : pts) worst = std::max(worst, total.coefficient_norm(k));
  return worst / norm;
}

namespace {

template <class FieldT, class NormF>
double contract_defect(const FieldT& f, const Domain& domain, const SampleSpec& spec,
                       double step, NormF diff_norm) {
  const auto pts = sample_domain(domain, spec);
  double worst = 0.0;
  for (const auto& k : pts) {
    // keep the finite-difference stencil inside the domain
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (double s : {-step, step})
        if (!domain.contains(k + s * Eigen::Vector3d::Unit(a))) ok = false;
    if (!ok) continue;
    worst = std::max(worst, diff_norm(f, k));
  }
  return worst;
}

}  // namespace

double derivative_contract_defect(const ScalarField& f, const Domain& domain,
                                  const SampleSpec& spec, double step) {
  return contract_defect(f, domain, spec, step,
                         [step](const ScalarField& g, const Eigen::Vector3d& k) {
                           const auto [v, grad] = g.value_grad(k);
                           double rel = 0.0;
                           for (int a = 0; a < 3; ++a) {
                             const Eigen::Vector3d e = Eigen::Vector3d::Unit(a);
                             const C0 fd = (g.value(k + step * e) - g.value(k - step * e)) /
                                           (2.0 * step);
                             rel = std::max(rel, std::abs(fd - grad[a]) /
                                                     (1.0 + std::abs(grad[a])));
                           }
                           return rel;
                         });
}

double derivative_contract_defect(const MatrixField& f, const Domain& domain,
                                  const SampleSpec& spec, double step) {
  return contract_defect(
      f, domain, spec, step, [step](const MatrixField& g, const Eigen::Vector3d& k) {
        double rel = 0.0;
        for (int a = 0; a < 3; ++a) {
          const Eigen::Vector3d e = Eigen::Vector3d::Unit(a);
          const Eigen::MatrixXcd fd =
              (g.value(k + step * e) - g.value(k - step * e)) / (2.0 * step);
          const Eigen::MatrixXcd exact = g.partial(a).value(k);
          rel = std::max(rel, (fd - exact).norm() / (1.0 + exact.norm()));
        }
        return rel;
      });
}

}  // namespace amcheck
