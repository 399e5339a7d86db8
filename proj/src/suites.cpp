#include "amcheck/suites.hpp"

#include <fstream>
#include <random>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>

#include "amcheck/gauge.hpp"
#include "amcheck/quadrature.hpp"
#include "amcheck/representations.hpp"
#include "amcheck/topology.hpp"

namespace amcheck {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CheckResult below(std::string id, std::string tag, double residual, double tol,
                  std::string detail = "") {
  CheckResult r;
  r.id = std::move(id);
  r.tag = std::move(tag);
  r.mode = "max";
  r.residual = residual;
  r.tolerance = tol;
  r.pass = residual < tol;
  r.detail = std::move(detail);
  return r;
}

CheckResult above(std::string id, std::string tag, double residual, double floor,
                  std::string detail = "") {
  CheckResult r;
  r.id = std::move(id);
  r.tag = std::move(tag);
  r.mode = "min";
  r.residual = residual;
  r.tolerance = floor;
  r.pass = residual > floor;
  r.detail = std::move(detail);
  return r;
}

CheckResult exact_int(std::string id, std::string tag, int found, int expected,
                      double guard_distance, double guard) {
  CheckResult r;
  r.id = std::move(id);
  r.tag = std::move(tag);
  r.mode = "max";
  r.residual = std::abs(found - expected) + guard_distance;
  r.tolerance = guard;
  r.pass = found == expected && guard_distance < guard;
  r.detail = "found " + std::to_string(found) + ", expected " + std::to_string(expected);
  return r;
}

SampleSpec spec_for(const SuiteConfig& cfg, const std::string& name) {
  SampleSpec s;
  s.count = cfg.samples;
  s.seed = cfg.seed ^ fnv1a(name);
  return s;
}

// ---- massive suite ----

std::vector<CheckResult> massive_checks_for_spin(const SuiteConfig& cfg, int s) {
  std::vector<CheckResult> out;
  const std::string base = "massive.s" + std::to_string(s) + ".";
  const MassiveSplit split = build_massive_jsl(s, 1.0);
  const double so3_tol = cfg.tol("so3_massive");
  const SampleSpec sp = spec_for(cfg, base);

  out.push_back(below(base + "so3.total", "so3-total-massive",
                      check_so3(split.total.ref(), sp, so3_tol).max_residual, so3_tol));
  out.push_back(below(base + "so3.spin", "so3-spin-wigner",
                      check_so3(split.spin.ref(), sp, so3_tol).max_residual, so3_tol));
  out.push_back(below(base + "so3.orbital", "so3-orbital-wigner",
                      check_so3(split.orbital.ref(), sp, so3_tol).max_residual,
                      so3_tol));

  const double vec_tol = cfg.tol("vector_massive");
  out.push_back(below(
      base + "vector_op.spin", "vector-operator-spin",
      check_vector_operator(split.spin.ref(), split.total.ref(), sp, vec_tol)
          .max_residual,
      vec_tol));
  out.push_back(below(
      base + "vector_op.orbital", "vector-operator-orbital",
      check_vector_operator(split.orbital.ref(), split.total.ref(), sp, vec_tol)
          .max_residual,
      vec_tol));

  const double com_tol = cfg.tol("commuting_massive");
  out.push_back(below(
      base + "commuting.spin_orbital", "spin-orbital-commute",
      check_commuting(split.spin.ref(), split.orbital.ref(), sp, com_tol).max_residual,
      com_tol));

  // structural split: spin is internal (zero drift), orbital is
  // external (zero fiber), and all drifts are tangent to the spheres
  // |k| = const (energy preserved)
  const auto pts = sample_domain(Domain::entire(), sp);
  double drift_sup = 0.0, fiber_sup = 0.0;
  for (const auto& k : pts) {
    for (int n = 0; n < 3; ++n) {
      const auto cs = split.spin.ops[n].coefficients(k);
      for (const auto& d : cs.drift) drift_sup = std::max(drift_sup, std::abs(d));
      const auto co = split.orbital.ops[n].coefficients(k);
      fiber_sup = std::max(fiber_sup, co.fiber.cwiseAbs().maxCoeff());
    }
  }
  const double structural = cfg.tol("structural_zero");
  out.push_back(below(base + "internal.spin", "spin-internal", drift_sup, structural));
  out.push_back(
      below(base + "external.orbital", "orbital-external", fiber_sup, structural));
  out.push_back(below(base + "energy.drift_tangent", "energy-preserving",
                      energy_preservation_defect(split.total, sp),
                      cfg.tol("energy_drift")));
  return out;
}

std::vector<CheckResult> suite_massive(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const int s : cfg.spins) {
    auto rs = massive_checks_for_spin(cfg, s);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

// ---- massless suite ----

std::vector<CheckResult> massless_checks_for_h(const SuiteConfig& cfg, int h) {
  std::vector<CheckResult> out;
  const std::string base = "massless.h" + std::to_string(h) + ".";
  const double so3_tol = cfg.tol("so3_massless");
  const double eig_tol = cfg.tol("helicity_eigenvalue");
  for (const ChartId chart : {ChartId::North, ChartId::South}) {
    const std::string cname = chart == ChartId::North ? "north" : "south";
    const SampleSpec sp = spec_for(cfg, base + cname);
    const OperatorTriple j = build_massless_j(h, chart);
    out.push_back(below(base + "so3." + cname, "so3-total-massless",
                        check_so3(j.ref(), sp, so3_tol).max_residual, so3_tol));
    out.push_back(below(base + "helicity." + cname, "helicity-eigenvalue",
                        helicity_eigenvalue_defect(j, h, sp), eig_tol));
    out.push_back(below(base + "energy." + cname, "energy-preserving",
                        energy_preservation_defect(j, sp), cfg.tol("energy_drift")));
  }
  if (h != 0) {
    // chart independence: the north operator conjugated by the
    // transition phase must agree with the south operator on the overlap
    const SampleSpec sp = spec_for(cfg, base + "transition");
    const OperatorTriple jn = build_massless_j(h, ChartId::North);
    const OperatorTriple js = build_massless_j(h, ChartId::South);
    const FiberFrame fn = FiberFrame::helicity(h, ChartId::North);
    const FiberFrame fs = FiberFrame::helicity(h, ChartId::South);
    const ScalarField tau = transition_phase(fs, fn);
    double worst = 0.0;
    for (int n = 0; n < 3; ++n)
      worst = std::max(worst, max_coefficient_distance(
                                  conjugate_by_phase(jn.ops[n], tau), js.ops[n], sp));
    out.push_back(below(base + "chart_independence", "chart-transition-conjugacy",
                        worst, cfg.tol("chart_transition")));
  }
  return out;
}

std::vector<CheckResult> suite_massless(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const int h : cfg.helicities) {
    auto rs = massless_checks_for_h(cfg, h);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

// ---- splitting suite ----

std::vector<CheckResult> splitting_checks_for_h(const SuiteConfig& cfg, int h) {
  std::vector<CheckResult> out;
  const std::string base = "splitting.h" + std::to_string(h) + ".";
  const SampleSpec sp = spec_for(cfg, base);
  const double rel_tol = cfg.tol("split_relations");
  const double floor = cfg.tol("closure_floor");

  const OperatorTriple j = build_massless_j(h, ChartId::North);
  const HelicitySplit split = build_parallel_perp(j, h);
  const auto rep = verify_nonstandard_relations(split, sp, rel_tol, floor);

  out.push_back(below(base + "rel.parallel_parallel", "split-parallel-abelian",
                      rep.parallel_parallel.max_residual, rel_tol));
  out.push_back(below(base + "rel.perp_parallel", "split-perp-parallel",
                      rep.perp_parallel.max_residual, rel_tol));
  out.push_back(below(base + "rel.perp_perp", "split-perp-perp-mixed",
                      rep.perp_perp.max_residual, rel_tol));
  out.push_back(above(base + "closure.perp", "perp-closure-defect",
                      rep.perp_closure.residual, floor,
                      "no Lie-algebra closure in span"));

  // the parallel triple closes with vanishing structure constants
  const ClosureFit par_fit = fit_structure_constants(
      std::span<const DiffOperator>(split.parallel.ops), sp);
  out.push_back(below(base + "closure.parallel.residual", "parallel-closure",
                      par_fit.residual, cfg.tol("closure_zero")));
  out.push_back(below(base + "closure.parallel.constants", "parallel-abelian-constants",
                      par_fit.max_abs(), cfg.tol("abelian_c_max")));

  // both halves are vector operators with respect to the total J
  const double vec_tol = cfg.tol("split_relations");
  out.push_back(below(
      base + "vector_op.parallel", "vector-operator-parallel",
      check_vector_operator(split.parallel.ref(), j.ref(), sp, vec_tol).max_residual,
      vec_tol));
  out.push_back(below(
      base + "vector_op.perp", "vector-operator-perp",
      check_vector_operator(split.perp.ref(), j.ref(), sp, vec_tol).max_residual,
      vec_tol));

  // triviality certificate applied to the parallel fiber parts: they
  // commute, so they fail so(3) and the implication holds vacuously
  std::array<ScalarField, 3> parfib;
  for (int n = 0; n < 3; ++n)
    parfib[n] = C0(h) * ScalarField::unit_coordinate(n);
  const auto triv =
      scalar_so3_triviality(parfib, j.ops[0].domain(), sp, cfg.tol("nogo1_so3"),
                            cfg.tol("nogo1_sup") / cfg.tol("nogo1_so3"));
  CheckResult tr;
  tr.id = base + "triviality.parallel_fibers";
  tr.tag = "internal-so3-triviality";
  tr.mode = "max";
  tr.residual = triv.satisfies_so3 ? triv.sup_norm : 0.0;
  tr.tolerance = cfg.tol("nogo1_sup");
  tr.pass = triv.pass;
  tr.detail = triv.satisfies_so3 ? "satisfies so(3)" : "fails so(3); implication vacuous";
  out.push_back(tr);
  return out;
}

std::vector<CheckResult> suite_splitting(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const int h : cfg.helicities) {
    auto rs = splitting_checks_for_h(cfg, h);
    out.insert(out.end(), rs.begin(), rs.end());
  }

  // randomized triviality certificates (rank 1 and rank 2)
  const int trials = 10000;
  const auto r1 = nogo1_rank1_certificate(trials, cfg.seed ^ fnv1a("nogo1.rank1"),
                                          cfg.tol("nogo1_so3"), cfg.tol("nogo1_sup"));
  CheckResult c1;
  c1.id = "splitting.nogo1.rank1";
  c1.tag = "internal-so3-triviality-rank1";
  c1.mode = "max";
  c1.residual = r1.worst_conditional;
  c1.tolerance = cfg.tol("nogo1_sup");
  c1.pass = r1.pass;
  c1.detail = std::to_string(r1.so3_passing) + "/" + std::to_string(r1.trials) +
              " trials satisfied so(3)";
  out.push_back(c1);

  const auto r2 = nogo1_rank2_casimir_certificate(
      trials, cfg.seed ^ fnv1a("nogo1.rank2"), cfg.tol("nogo1_so3"),
      cfg.tol("nogo1_casimir"));
  CheckResult c2;
  c2.id = "splitting.nogo1.rank2_casimir";
  c2.tag = "internal-so3-triviality-rank2";
  c2.mode = "max";
  c2.residual = r2.worst_conditional;
  c2.tolerance = cfg.tol("nogo1_casimir");
  c2.pass = r2.pass;
  c2.detail = std::to_string(r2.so3_passing) + "/" + std::to_string(r2.trials) +
              " trials satisfied so(3)";
  out.push_back(c2);

  // block-diagonal helicity generators on the rank-2 sum commute, so
  // they must fail so(3) by a wide margin
  for (const int h : cfg.helicities) {
    if (h <= 0) continue;
    const SampleSpec sp = spec_for(cfg, "splitting.block.h" + std::to_string(h));
    const auto blk = block_helicity_generators(h, Domain::punctured());
    const auto rep = check_so3(OperatorTripleRef(blk), sp, cfg.tol("nogo1_so3"));
    out.push_back(above("splitting.block_generators.h" + std::to_string(h),
                        "block-helicity-not-so3", rep.max_residual,
                        cfg.tol("closure_floor"),
                        "diagonal generators commute, so(3) fails"));
  }
  return out;
}

// ---- topology suite ----

std::vector<CheckResult> suite_topology(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const SphericalMesh mesh = icosphere(cfg.mesh_level);
  const double guard = cfg.tol("chern_guard");

  // mesh sanity
  out.push_back(exact_int("topology.mesh.euler", "mesh-euler-characteristic",
                          mesh.euler_characteristic(), 2, 0.0, guard));
  out.push_back(below("topology.mesh.orientation", "mesh-orientation",
                      mesh.orientation_consistent() ? 0.0 : 1.0, 0.5));

  for (const int h : cfg.helicities) {
    if (h == 0) continue;
    const std::string base = "topology.h" + std::to_string(h) + ".";
    const FrameAtlas atlas(h);
    const ChernResult cr = chern_number(atlas, mesh);
    const double dist = std::abs(cr.total_flux / (2.0 * std::numbers::pi) - cr.chern);
    out.push_back(
        exact_int(base + "chern", "chern-number", cr.chern, -2 * h, dist, guard));

    // octant-triangle holonomy against the spherical-excess oracle
    const LoopPath octant = LoopPath::geodesic_polygon(
        {Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY()},
        67);
    const double omega =
        spherical_triangle_excess(Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(),
                                  Eigen::Vector3d::UnitY());
    const std::complex<double> expected = std::exp(std::complex<double>(0.0, h * omega));
    const std::complex<double> got = berry_holonomy(atlas, octant);
    out.push_back(below(base + "holonomy.octant", "holonomy-solid-angle",
                        std::abs(got - expected), cfg.tol("holonomy"),
                        "loop solid angle pi/2"));

    // hemisphere consistency: total plaquette flux of a region equals
    // the holonomy of its boundary
    const MeshRegion region = select_region(
        mesh, [](const Eigen::Vector3d& c) { return c.z() > 0.0; });
    const double flux = region_flux(atlas, mesh, region.faces);
    const std::complex<double> boundary = berry_holonomy(atlas, region.boundary);
    // flux carries the reversed-cycle convention, so its exponential
    // matches the boundary holonomy traversed backwards
    out.push_back(below(base + "holonomy.hemisphere", "holonomy-chern-consistency",
                        std::abs(std::exp(std::complex<double>(0.0, -flux)) - boundary),
                        cfg.tol("holonomy")));
  }

  // trivial bundle: zero Chern number
  {
    const FrameAtlas trivial{FiberFrame::trivial_line()};
    const ChernResult cr = chern_number(trivial, mesh);
    const double dist = std::abs(cr.total_flux / (2.0 * std::numbers::pi) - cr.chern);
    out.push_back(exact_int("topology.h0.chern", "chern-number", cr.chern, 0, dist,
                            guard));
  }

  // Whitney sums of opposite helicities are trivial
  for (const int h : cfg.helicities) {
    if (h <= 0) continue;
    const std::vector<FrameAtlas> pair{FrameAtlas(h), FrameAtlas(-h)};
    const ChernResult cr = whitney_sum_chern(pair, mesh);
    const double dist = std::abs(cr.total_flux / (2.0 * std::numbers::pi) - cr.chern);
    out.push_back(exact_int("topology.whitney.pm" + std::to_string(h),
                            "whitney-sum-chern", cr.chern, 0, dist, guard));
  }

  // no-go-2 echo: external actions produce well-defined global frames
  // exactly when the bundle is trivial
  const Eigen::Vector3d k0 = Eigen::Vector3d::UnitZ();
  const auto angles = default_stabilizer_angles(cfg.seed ^ fnv1a("topology.nogo2"));
  struct Entry {
    std::string name;
    double residual;
    int chern;
    double gram;
  };
  std::vector<Entry> entries;
  {
    const auto act = BundleRotationAction::trivial_line();
    const auto res = external_frame_construction(
        act, k0, Eigen::MatrixXcd::Ones(1, 1), mesh, angles);
    const FrameAtlas trivial{FiberFrame::trivial_line()};
    entries.push_back({"trivial_line", res.residual, chern_number(trivial, mesh).chern,
                       res.min_gram_det});
  }
  {
    // the trivial rank-3 bundle carries an external action (constant
    // transport of the ambient coordinates); the construction must
    // return three independent global sections
    const auto act = BundleRotationAction::ambient_constant();
    const auto res = external_frame_construction(
        act, k0, Eigen::MatrixXcd::Identity(3, 3), mesh, angles);
    std::vector<FrameAtlas> basis_lines;
    for (int i = 0; i < 3; ++i)
      basis_lines.emplace_back(
          FiberFrame::constant_line(Eigen::Vector3cd::Unit(i)));
    entries.push_back({"ambient_constant", res.residual,
                       whitney_sum_chern(basis_lines, mesh).chern, res.min_gram_det});
    out.push_back(above("topology.nogo2.ambient_rank3.gram", "global-frame-rank",
                        res.min_gram_det, 0.9, "three independent sections"));
    // rotating the ambient coordinates instead is NOT external: the
    // stabilizer of k0 turns the transverse polarizations
    const auto rot = external_frame_construction(
        BundleRotationAction::ambient_vector(), k0, Eigen::MatrixXcd::Identity(3, 3),
        mesh, angles);
    out.push_back(above("topology.nogo2.ambient_rotating.residual",
                        "rotating-action-not-external", rot.residual,
                        cfg.tol("frame_floor"),
                        "stabilizer of k0 rotates the fiber"));
  }
  for (const int h : cfg.helicities) {
    if (h == 0) continue;
    const FiberFrame frame = FiberFrame::helicity(h, ChartId::North);
    const auto act = BundleRotationAction::from_frame(frame);
    const auto res = external_frame_construction(act, k0, frame.frame(k0), mesh, angles);
    entries.push_back({"helicity_h" + std::to_string(h), res.residual,
                       chern_number(FrameAtlas(h), mesh).chern, res.min_gram_det});
    out.push_back(above("topology.nogo2.h" + std::to_string(h) + ".residual",
                        "frame-construction-obstruction", res.residual,
                        cfg.tol("frame_floor"),
                        "stabilizer phases obstruct a global frame"));
  }
  double zero_residuals = 0.0;
  bool equivalence = true;
  for (const auto& e : entries) {
    const bool well_defined = e.residual < cfg.tol("frame_zero");
    if (well_defined != (e.chern == 0)) equivalence = false;
    if (e.chern == 0) zero_residuals = std::max(zero_residuals, e.residual);
  }
  out.push_back(below("topology.nogo2.zero_residuals", "external-action-residual",
                      zero_residuals, cfg.tol("frame_zero")));
  out.push_back(below("topology.nogo2.equivalence", "trivial-iff-external",
                      equivalence ? 0.0 : 1.0, 0.5,
                      "residual ~ 0 exactly for Chern 0"));
  return out;
}

// ---- gauge suite ----

std::vector<CheckResult> suite_gauge(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const SampleSpec sp = spec_for(cfg, "gauge");
  const auto pts = sample_domain(Domain::punctured(), sp);
  std::mt19937_64 rng(cfg.seed ^ fnv1a("gauge.random"));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rand_vec = [&]() {
    return Eigen::Vector3cd(C0(u(rng), u(rng)), C0(u(rng), u(rng)), C0(u(rng), u(rng)));
  };

  double idem = 0.0, cls = 0.0, transverse = 0.0, gauge_cond = 0.0, formula = 0.0;
  for (const auto& k : pts) {
    const Eigen::Vector3cd a = rand_vec();
    const C0 alpha(u(rng), u(rng));
    const Eigen::Vector3cd proj = coulomb_project(k, a);
    idem = std::max(idem, (coulomb_project(k, proj) - proj).norm());
    const Eigen::Vector3cd shifted = a + alpha * k.cast<C0>();
    cls = std::max(cls, (coulomb_project(k, shifted) - proj).norm());
    C0 kdot(0.0, 0.0);
    for (int i = 0; i < 3; ++i) kdot += k[i] * proj[i];
    transverse = std::max(transverse, std::abs(kdot));
    // completed potential satisfies the gauge condition
    const GaugePotential g = lorentz_gauge_complete(k, a);
    C0 ak(0.0, 0.0);
    for (int i = 0; i < 3; ++i) ak += g.A[i] * k[i];
    gauge_cond = std::max(gauge_cond, std::abs(-g.A0 * k.norm() + ak));
    // closed-form distance of the descent counterexample
    Eigen::Vector3d axis(u(rng), u(rng), u(rng));
    while (axis.norm() < 1e-3) axis = Eigen::Vector3d(u(rng), u(rng), u(rng));
    const Rotation r = Rotation::from_axis_angle(axis, 1.0 + 0.5 * u(rng));
    const auto d = sam_descent_counterexample(k, a, alpha, r);
    if (!d.degenerate) {
      const double expect =
          std::abs(alpha) * coulomb_project(k, r.apply(k).cast<C0>()).norm();
      formula = std::max(formula, std::abs(d.distance - expect));
    }
  }
  out.push_back(below("gauge.coulomb.idempotent", "coulomb-idempotent", idem,
                      cfg.tol("coulomb_idempotent")));
  out.push_back(below("gauge.coulomb.class_constant", "coulomb-gauge-invariant", cls,
                      cfg.tol("gauge_class")));
  out.push_back(below("gauge.coulomb.transverse", "coulomb-transversality", transverse,
                      cfg.tol("coulomb_idempotent")));
  out.push_back(below("gauge.lorentz.condition", "gauge-condition-complete",
                      gauge_cond, cfg.tol("coulomb_idempotent")));
  out.push_back(below("gauge.descent.formula", "descent-distance-formula", formula,
                      cfg.tol("descent_exact")));

  // canonical counterexample: k = z-hat, A = x-hat, alpha = 1,
  // quarter-turn about x
  const auto canonical = sam_descent_counterexample(
      Eigen::Vector3d::UnitZ(), Eigen::Vector3cd::UnitX(), C0(1.0, 0.0),
      Rotation::about_x(std::numbers::pi / 2.0));
  out.push_back(below("gauge.descent.canonical", "descent-counterexample",
                      std::abs(canonical.distance - 1.0), cfg.tol("descent_exact"),
                      "images remain gauge-inequivalent"));
  const auto degenerate = sam_descent_counterexample(
      Eigen::Vector3d::UnitZ(), Eigen::Vector3cd::UnitX(), C0(1.0, 0.0),
      Rotation::about_z(1.0));
  out.push_back(below("gauge.descent.degenerate", "descent-degenerate-axis",
                      std::abs(degenerate.distance) + (degenerate.degenerate ? 0.0 : 1.0),
                      cfg.tol("descent_exact"), "rotation fixing k is flagged"));

  // the fiber rotation generators themselves satisfy so(3); descent,
  // not the algebra, is what fails
  const auto sam = gauge_sam_operators(Domain::punctured());
  const SampleSpec sp2 = spec_for(cfg, "gauge.sam");
  out.push_back(below("gauge.sam.so3", "so3-gauge-sam",
                      check_so3(OperatorTripleRef(sam), sp2, 1e-12).max_residual,
                      1e-12));

  // unitary quadrature: rotated sections keep their inner products
  {
    const SphereQuadrature quad = sphere_quadrature(24);
    const FiberFrame frame = FiberFrame::helicity(1, ChartId::North);
    const FiberFrame south = FiberFrame::helicity(1, ChartId::South);
    auto smooth_section = [&](const Eigen::Vector3d& k) -> Eigen::VectorXcd {
      // globally smooth section: ambient polynomial projected onto the
      // helicity line (the projector is chart-independent)
      const Eigen::MatrixXcd e =
          k.z() >= 0.0 ? frame.frame(k) : south.frame(k);
      Eigen::Vector3cd poly(C0(k.x() * k.z(), 0.2), C0(0.4, k.y()),
                            C0(k.x(), -0.3 * k.z()));
      return e * (e.adjoint() * poly);
    };
    auto smooth_section2 = [&](const Eigen::Vector3d& k) -> Eigen::VectorXcd {
      const Eigen::MatrixXcd e =
          k.z() >= 0.0 ? frame.frame(k) : south.frame(k);
      Eigen::Vector3cd poly(C0(0.1, k.y() * k.y()), C0(k.z(), 0.7), C0(-k.y(), k.x()));
      return e * (e.adjoint() * poly);
    };
    const Rotation r = Rotation::from_axis_angle({0.3, -0.5, 0.8}, 0.9);
    const Eigen::Matrix3cd rot = r.matrix().cast<C0>();
    auto rotated = [&](const std::function<Eigen::VectorXcd(const Eigen::Vector3d&)>& f) {
      return [&, f](const Eigen::Vector3d& k) -> Eigen::VectorXcd {
        return rot * f(r.inverse().apply(k));
      };
    };
    const auto s1 = sample_section(quad, smooth_section);
    const auto s2 = sample_section(quad, smooth_section2);
    const auto r1 = sample_section(quad, rotated(smooth_section));
    const auto r2 = sample_section(quad, rotated(smooth_section2));
    const C0 plain = section_inner_product(s1, s2, quad);
    const C0 moved = section_inner_product(r1, r2, quad);
    out.push_back(below("gauge.sections.unitary", "rotation-invariant-inner-product",
                        std::abs(plain - moved), cfg.tol("unitarity")));
  }
  return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"massive", suite_massive},
      {"massless", suite_massless},
      {"splitting", suite_splitting},
      {"topology", suite_topology},
      {"gauge", suite_gauge},
  };
  return reg;
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tols = {
      {"so3_massive", 1e-10},      {"vector_massive", 1e-10},
      {"commuting_massive", 1e-10}, {"structural_zero", 1e-12},
      {"energy_drift", 1e-10},     {"so3_massless", 1e-8},
      {"helicity_eigenvalue", 1e-9}, {"chart_transition", 1e-8},
      {"split_relations", 1e-8},   {"closure_zero", 1e-8},
      {"closure_floor", 0.1},      {"abelian_c_max", 1e-8},
      {"nogo1_so3", 1e-8},         {"nogo1_sup", 1e-7},
      {"nogo1_casimir", 1e-7},     {"holonomy", 1e-6},
      {"chern_guard", 0.01},       {"frame_zero", 1e-10},
      {"frame_floor", 1.0},        {"coulomb_idempotent", 1e-12},
      {"gauge_class", 1e-10},      {"descent_exact", 1e-10},
      {"derivative_contract", 1e-7}, {"jacobi", 1e-9},
      {"unitarity", 1e-8},
  };
  return tols;
}

double SuiteConfig::tol(const std::string& name) const {
  const auto o = tolerance_overrides.find(name);
  if (o != tolerance_overrides.end()) return o->second;
  const auto d = default_tolerances().find(name);
  if (d == default_tolerances().end())
    throw ConfigError("unknown tolerance name: " + name);
  return d->second;
}

void SuiteConfig::validate() const {
  bool known = suite == "all";
  for (const auto& [name, fn] : suite_registry()) known = known || suite == name;
  if (!known) throw ConfigError("unknown suite: " + suite);
  if (samples < 10) throw ConfigError("sample count must be at least 10");
  if (mesh_level < 0 || mesh_level > 8) throw ConfigError("mesh level out of range");
  for (const auto& [name, value] : tolerance_overrides) {
    if (value <= 0.0) throw ConfigError("tolerance must be positive: " + name);
    if (!default_tolerances().count(name))
      throw ConfigError("unknown tolerance name: " + name);
  }
  for (const int s : spins)
    if (s < 0) throw ConfigError("spin must be a non-negative integer");
  for (const int h : helicities)
    if (std::abs(h) > 2) throw ConfigError("|helicity| > 2 unsupported");
  if (format != "json" && format != "md") throw ConfigError("format must be json or md");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_registry()) names.push_back(name);
  return names;
}

std::string version_string() { return "amcheck 0.1.0"; }

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  VerificationReport rep;
  rep.suite = config.suite;
  rep.seed = config.seed;
  rep.version = version_string();
  rep.samples = config.samples;
  rep.mesh_level = config.mesh_level;

  std::vector<std::future<std::vector<CheckResult>>> futures;
  for (const auto& [name, fn] : suite_registry()) {
    if (config.suite != "all" && config.suite != name) continue;
    futures.push_back(std::async(std::launch::async, fn, config));
  }
  for (auto& f : futures) {
    const auto checks = f.get();
    rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
  }
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

SuiteConfig parse_config_file(const std::string& path, const SuiteConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  SuiteConfig cfg = base;
  std::string line;
  int lineno = 0;
  auto parse_ints = [](const std::string& v) {
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "suite") cfg.suite = value;
      else if (key == "spins") cfg.spins = parse_ints(value);
      else if (key == "helicities") cfg.helicities = parse_ints(value);
      else if (key == "samples") cfg.samples = std::stoi(value);
      else if (key == "mesh_level") cfg.mesh_level = std::stoi(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "format") cfg.format = value;
      else if (key == "out") cfg.out = value;
      else if (key.rfind("tol.", 0) == 0)
        cfg.tolerance_overrides[key.substr(4)] = std::stod(value);
      else throw ConfigError("unknown config key: " + key);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("config line " + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return cfg;
}

}  // namespace amcheck
