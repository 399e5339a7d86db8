// Acceptance suite: every criterion the toolkit must certify, one
// pass/fail line each, with tolerances pinned in code. Exits nonzero if
// any criterion fails.
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "amcheck/gauge.hpp"
#include "amcheck/report.hpp"
#include "amcheck/representations.hpp"
#include "amcheck/suites.hpp"
#include "amcheck/topology.hpp"

using namespace amcheck;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
            << what << " (" << detail << ")\n";
  if (!pass) ++failures;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

SampleSpec spec100(std::uint64_t seed) {
  SampleSpec s;
  s.count = 100;
  s.seed = seed;
  return s;
}

// 1. massive Wigner split
void criterion_massive() {
  double worst = 0.0;
  double structural = 0.0;
  for (const int s : {0, 1, 2}) {
    const auto split = build_massive_jsl(s, 1.0);
    const SampleSpec sp = spec100(1000 + s);
    worst = std::max(worst, check_so3(split.total.ref(), sp, 1e-10).max_residual);
    worst = std::max(worst, check_so3(split.spin.ref(), sp, 1e-10).max_residual);
    worst = std::max(worst, check_so3(split.orbital.ref(), sp, 1e-10).max_residual);
    worst = std::max(
        worst, check_commuting(split.spin.ref(), split.orbital.ref(), sp, 1e-10)
                   .max_residual);
    worst = std::max(
        worst, check_vector_operator(split.spin.ref(), split.total.ref(), sp, 1e-10)
                   .max_residual);
    worst = std::max(
        worst, check_vector_operator(split.orbital.ref(), split.total.ref(), sp, 1e-10)
                   .max_residual);
    for (const auto& k : sample_domain(Domain::entire(), sp))
      for (int n = 0; n < 3; ++n) {
        const auto cs = split.spin.ops[n].coefficients(k);
        for (const auto& d : cs.drift) structural = std::max(structural, std::abs(d));
        const auto co = split.orbital.ops[n].coefficients(k);
        structural = std::max(structural, co.fiber.cwiseAbs().maxCoeff());
      }
  }
  report(1, "massive Wigner split s in {0,1,2}: so(3), commuting, vector operators",
         worst < 1e-10 && structural == 0.0,
         "max residual " + fmt(worst) + " < 1e-10, internal/external split exact");
}

// 2. massless total J
void criterion_massless() {
  double so3 = 0.0, eig = 0.0;
  for (const int h : {1, -1, 2, -2})
    for (const ChartId chart : {ChartId::North, ChartId::South}) {
      const auto j = build_massless_j(h, chart);
      const SampleSpec sp = spec100(2000 + h);
      so3 = std::max(so3, check_so3(j.ref(), sp, 1e-8).max_residual);
      eig = std::max(eig, helicity_eigenvalue_defect(j, h, sp));
    }
  report(2, "massless total J (h = +-1, +-2): so(3) on both charts, helicity eigenvalue",
         so3 < 1e-8 && eig < 1e-9,
         "so(3) " + fmt(so3) + " < 1e-8, eigenvalue defect " + fmt(eig) + " < 1e-9");
}

// 3. nonstandard relations and the closure dichotomy
void criterion_splitting() {
  double rel = 0.0, cmax = 0.0, perp_min = 1e300;
  bool gap_empty = true;
  for (const int h : {1, -1, 2, -2}) {
    const auto j = build_massless_j(h, ChartId::North);
    const auto split = build_parallel_perp(j, h);
    const SampleSpec sp = spec100(3000 + h);
    const auto rep = verify_nonstandard_relations(split, sp, 1e-8, 0.1);
    rel = std::max({rel, rep.parallel_parallel.max_residual,
                    rep.perp_parallel.max_residual, rep.perp_perp.max_residual});
    perp_min = std::min(perp_min, rep.perp_closure.residual);
    const auto par = fit_structure_constants(
        std::span<const DiffOperator>(split.parallel.ops), sp);
    cmax = std::max(cmax, par.max_abs());
    for (const double r : {rep.perp_closure.residual, par.residual})
      if (r >= 1e-8 && r <= 0.1) gap_empty = false;
  }
  report(3, "splitting relations, abelian parallel part, perp non-closure",
         rel < 1e-8 && cmax < 1e-8 && perp_min > 0.1 && gap_empty,
         "relations " + fmt(rel) + " < 1e-8, max|c| " + fmt(cmax) +
             " < 1e-8, perp closure residual " + fmt(perp_min) +
             " > 0.1, gap (1e-8, 0.1) empty");
}

// 4. randomized triviality certificates
void criterion_nogo1() {
  const auto r1 = nogo1_rank1_certificate(10000, 4001);
  const auto r2 = nogo1_rank2_casimir_certificate(10000, 4002);
  report(4, "internal so(3) triples are trivial (rank 1 sup, rank 2 Casimir)",
         r1.pass && r2.pass && r1.worst_conditional < 1e-7 &&
             r2.worst_conditional < 1e-7,
         "rank1: " + std::to_string(r1.so3_passing) + "/10000 so(3)-passing, sup " +
             fmt(r1.worst_conditional) + " < 1e-7; rank2: " +
             std::to_string(r2.so3_passing) + "/10000, Casimir " +
             fmt(r2.worst_conditional) + " < 1e-7");
}

// 5. Chern numbers
void criterion_chern() {
  bool ok = true;
  std::string detail;
  for (const int h : {1, -1, 2, -2}) {
    int first = 0;
    for (const int level : {3, 4, 5}) {
      const auto r = chern_number(FrameAtlas(h), icosphere(level));
      if (level == 3) {
        first = r.chern;
        detail += "h=" + std::to_string(h) + ":" + std::to_string(r.chern) + " ";
      }
      ok = ok && r.chern == -2 * h && r.chern == first;
    }
  }
  const auto mesh = icosphere(4);
  for (const int h : {1, 2}) {
    const std::vector<FrameAtlas> pair{FrameAtlas(h), FrameAtlas(-h)};
    const int w = whitney_sum_chern(pair, mesh).chern;
    ok = ok && w == 0;
    detail += "whitney(+-" + std::to_string(h) + ")=" + std::to_string(w) + " ";
  }
  report(5, "Chern numbers -2h, stable over mesh levels 3-5; Whitney sums vanish", ok,
         detail);
}

// 6. holonomy against the solid-angle oracle
void criterion_holonomy() {
  double worst = 0.0;
  // geodesic triangles with the stated solid angles (right angle at the
  // pole, equatorial opening equal to the target solid angle)
  const std::vector<std::pair<std::vector<Eigen::Vector3d>, double>> triangles = {
      {{Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY()},
       kPi / 2.0},
      {{Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(),
        Eigen::Vector3d(std::cos(0.3), std::sin(0.3), 0.0)},
       0.3},
      {{Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(),
        Eigen::Vector3d(std::cos(1.7), std::sin(1.7), 0.0)},
       1.7},
  };
  for (const auto& [corners, target] : triangles) {
    const double omega = spherical_triangle_excess(corners[0], corners[1], corners[2]);
    worst = std::max(worst, std::abs(omega - target));
    const auto loop = LoopPath::geodesic_polygon(corners, 67);  // ~200 segments
    for (const int h : {1, -1, 2, -2}) {
      const C0 hol = berry_holonomy(FrameAtlas(h), loop);
      worst = std::max(worst, std::abs(hol - std::exp(C0(0.0, h * omega))));
    }
  }
  // hemisphere consistency
  const auto mesh = icosphere(4);
  const auto region =
      select_region(mesh, [](const Eigen::Vector3d& c) { return c.z() > 0.0; });
  for (const int h : {1, 2}) {
    const FrameAtlas atlas(h);
    const double flux = region_flux(atlas, mesh, region.faces);
    const C0 hol = berry_holonomy(atlas, region.boundary);
    worst = std::max(worst, std::abs(std::exp(C0(0.0, -flux)) - hol));
  }
  report(6, "Berry holonomy exp(i h Omega) for Omega in {pi/2, 0.3, 1.7}; hemisphere flux",
         worst < 1e-6, "max deviation " + fmt(worst) + " < 1e-6");
}

// 7. external-frame echo of the topology obstruction
void criterion_nogo2() {
  const auto mesh = icosphere(3);
  const Eigen::Vector3d k0 = Eigen::Vector3d::UnitZ();
  const auto angles = default_stabilizer_angles(4242);
  double zero_res = 0.0, nonzero_min = 1e300;
  bool equivalence = true;
  {
    const auto res = external_frame_construction(BundleRotationAction::trivial_line(),
                                                 k0, Eigen::MatrixXcd::Ones(1, 1),
                                                 mesh, angles);
    zero_res = std::max(zero_res, res.residual);
    const int c = chern_number(FrameAtlas{FiberFrame::trivial_line()}, mesh).chern;
    equivalence = equivalence && ((res.residual < 1e-10) == (c == 0));
  }
  {
    const auto res = external_frame_construction(
        BundleRotationAction::ambient_constant(), k0, Eigen::MatrixXcd::Identity(3, 3),
        mesh, angles);
    zero_res = std::max(zero_res, res.residual);
    equivalence = equivalence && res.min_gram_det > 0.9 && res.residual < 1e-10;
  }
  for (const int h : {1, -1, 2, -2}) {
    const auto frame = FiberFrame::helicity(h, ChartId::North);
    const auto res = external_frame_construction(BundleRotationAction::from_frame(frame),
                                                 k0, frame.frame(k0), mesh, angles);
    nonzero_min = std::min(nonzero_min, res.residual);
    const int c = chern_number(FrameAtlas(h), mesh).chern;
    equivalence = equivalence && ((res.residual < 1e-10) == (c == 0));
  }
  report(7, "frame construction: residual ~ 0 iff Chern 0; obstruction >= 1 otherwise",
         zero_res < 1e-10 && nonzero_min >= 1.0 && equivalence,
         "trivial residual " + fmt(zero_res) + " < 1e-10, helicity residual " +
             fmt(nonzero_min) + " >= 1");
}

// 8. gauge suite
void criterion_gauge() {
  std::mt19937_64 rng(8001);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double idem = 0.0, cls = 0.0;
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector3d k(u(rng), u(rng), u(rng));
    if (k.norm() < 1e-2) continue;
    Eigen::Vector3cd a(C0(u(rng), u(rng)), C0(u(rng), u(rng)), C0(u(rng), u(rng)));
    const Eigen::Vector3cd p = coulomb_project(k, a);
    idem = std::max(idem, (coulomb_project(k, p) - p).norm());
    cls = std::max(cls, (coulomb_project(k, a + C0(u(rng), u(rng)) * k.cast<C0>()) - p)
                            .norm());
  }
  const auto canonical = sam_descent_counterexample(
      Eigen::Vector3d::UnitZ(), Eigen::Vector3cd::UnitX(), C0(1.0),
      Rotation::about_x(kPi / 2.0));
  const double descent_err = std::abs(canonical.distance - 1.0);
  report(8, "gauge: Coulomb projection idempotent and class-constant; descent distance 1",
         idem < 1e-12 && cls < 1e-10 && descent_err < 1e-10,
         "idempotency " + fmt(idem) + " < 1e-12, class constancy " + fmt(cls) +
             " < 1e-10, |distance - 1| " + fmt(descent_err) + " < 1e-10");
}

// 9. infrastructure: derivative contract, Jacobi, deterministic reports
void criterion_infrastructure() {
  const auto reg = registered_coefficient_fields();
  double contract = 0.0;
  SampleSpec sp;
  sp.count = 40;
  sp.seed = 9001;
  for (const auto& f : reg.scalars)
    contract = std::max(contract, derivative_contract_defect(f.field, f.domain, sp));
  for (const auto& f : reg.matrices)
    contract = std::max(contract, derivative_contract_defect(f.field, f.domain, sp));

  std::mt19937_64 rng(9002);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double jacobi = 0.0;
  const Domain dom = Domain::entire();
  for (int i = 0; i < 100; ++i) {
    auto poly = [&]() {
      std::array<C0, 4> c;
      for (auto& x : c) x = C0(u(rng), u(rng));
      return ScalarField::make([c](const auto& p) {
        using S = std::decay_t<decltype(p[0])>;
        return S(c[0]) + S(c[1]) * p[0] + S(c[2]) * p[1] * p[2] + S(c[3]) * p[2] * p[2];
      });
    };
    auto op = [&]() {
      return DiffOperator({poly(), poly(), poly()},
                          MatrixField::from_scalar(poly()), dom);
    };
    SampleSpec jsp;
    jsp.count = 8;
    jsp.seed = 9100 + i;
    jacobi = std::max(jacobi, jacobi_defect(op(), op(), op(), jsp));
  }

  SuiteConfig cfg;
  cfg.suite = "gauge";
  cfg.samples = 20;
  const std::string a = emit_report(run_suite(cfg), "json");
  const std::string b = emit_report(run_suite(cfg), "json");

  report(9, "derivative contract on registered fields; Jacobi identity; report determinism",
         contract < 1e-7 && jacobi < 1e-9 && a == b,
         "contract " + fmt(contract) + " < 1e-7, Jacobi " + fmt(jacobi) +
             " < 1e-9, byte-identical reports " + (a == b ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion_massive();
  criterion_massless();
  criterion_splitting();
  criterion_nogo1();
  criterion_chern();
  criterion_holonomy();
  criterion_nogo2();
  criterion_gauge();
  criterion_infrastructure();
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria hold\n";
  return 0;
}
