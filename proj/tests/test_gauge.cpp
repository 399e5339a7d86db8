#include <doctest.h>

#include <numbers>
#include <random>

#include "amcheck/gauge.hpp"
#include "amcheck/quadrature.hpp"
#include "amcheck/representations.hpp"

using namespace amcheck;

namespace {
const C0 kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("lorentz_gauge_complete") {
  SUBCASE("transverse potential has A0 = 0") {
    const auto g = lorentz_gauge_complete({0, 0, 1}, Eigen::Vector3cd::UnitX());
    CHECK(std::abs(g.A0) < 1e-15);
  }
  SUBCASE("longitudinal potentials") {
    const auto g1 = lorentz_gauge_complete({0, 0, 1}, Eigen::Vector3cd::UnitZ());
    CHECK(std::abs(g1.A0 - C0(1.0)) < 1e-15);
    const auto g2 = lorentz_gauge_complete({0, 0, 2}, Eigen::Vector3cd::UnitZ());
    CHECK(std::abs(g2.A0 - C0(1.0)) < 1e-15);
  }
  SUBCASE("k = 0 is a domain error") {
    CHECK_THROWS_AS(lorentz_gauge_complete({0, 0, 0}, Eigen::Vector3cd::UnitX()),
                    std::domain_error);
  }
  SUBCASE("the completed potential satisfies the gauge condition") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-2) continue;
      Eigen::Vector3cd a(C0(u(rng), u(rng)), C0(u(rng), u(rng)), C0(u(rng), u(rng)));
      const auto g = lorentz_gauge_complete(k, a);
      C0 ak(0.0, 0.0);
      for (int c = 0; c < 3; ++c) ak += g.A[c] * k[c];
      CHECK(std::abs(-g.A0 * k.norm() + ak) < 1e-12);
    }
  }
}

TEST_CASE("gauge_equivalent") {
  const Eigen::Vector3d k(0.4, -0.2, 1.1);
  const Eigen::Vector3cd a(C0(1.0, 0.5), C0(0.0, -0.3), C0(0.7, 0.0));
  SUBCASE("shifting along k is equivalent, complex coefficients included") {
    CHECK(gauge_equivalent(k, a, a + 2.5 * k.cast<C0>()));
    CHECK(gauge_equivalent(k, a, a + C0(0.3, -1.2) * k.cast<C0>()));
  }
  SUBCASE("a potential is equivalent to itself") { CHECK(gauge_equivalent(k, a, a)); }
  SUBCASE("transverse shifts are inequivalent") {
    CHECK(!gauge_equivalent({0, 0, 1}, Eigen::Vector3cd::UnitX(),
                            Eigen::Vector3cd::UnitX() + Eigen::Vector3cd::UnitY()));
  }
}

TEST_CASE("coulomb_project") {
  SUBCASE("longitudinal input projects to zero") {
    const Eigen::Vector3d k(0.3, 0.4, 1.2);
    const Eigen::Vector3cd a = C0(0.7, -0.2) * k.cast<C0>();
    CHECK(coulomb_project(k, a).norm() < 1e-14);
  }
  SUBCASE("k = z-hat, A = (1,0,1) projects to (1,0,0)") {
    const Eigen::Vector3cd proj =
        coulomb_project({0, 0, 1}, Eigen::Vector3cd::UnitX() + Eigen::Vector3cd::UnitZ());
    CHECK((proj - Eigen::Vector3cd::UnitX()).norm() < 1e-14);
  }
  SUBCASE("idempotent, transverse, and constant on gauge classes") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-2) continue;
      Eigen::Vector3cd a(C0(u(rng), u(rng)), C0(u(rng), u(rng)), C0(u(rng), u(rng)));
      const Eigen::Vector3cd p = coulomb_project(k, a);
      CHECK((coulomb_project(k, p) - p).norm() < 1e-12);
      C0 kp(0.0, 0.0);
      for (int c = 0; c < 3; ++c) kp += k[c] * p[c];
      CHECK(std::abs(kp) < 1e-12 * (1.0 + k.norm() * a.norm()));
      const C0 alpha(u(rng), u(rng));
      CHECK((coulomb_project(k, a + alpha * k.cast<C0>()) - p).norm() < 1e-10);
    }
  }
}

TEST_CASE("sam_descent_counterexample") {
  SUBCASE("canonical input: k = z, A = x, alpha = 1, quarter turn about x") {
    const auto r = sam_descent_counterexample(
        {0, 0, 1}, Eigen::Vector3cd::UnitX(), C0(1.0), Rotation::about_x(kPi / 2.0));
    CHECK(!r.degenerate);
    CHECK(std::abs(r.distance - 1.0) < 1e-10);
    CHECK((r.image_a - Eigen::Vector3cd::UnitX()).norm() < 1e-12);
    const Eigen::Vector3cd expected_b =
        Eigen::Vector3cd::UnitX() - Eigen::Vector3cd::UnitY();
    CHECK((r.image_b - expected_b).norm() < 1e-12);
  }
  SUBCASE("alpha = 0 gives zero distance") {
    const auto r = sam_descent_counterexample(
        {0, 0, 1}, Eigen::Vector3cd::UnitX(), C0(0.0), Rotation::about_x(kPi / 2.0));
    CHECK(r.distance < 1e-14);
  }
  SUBCASE("rotations fixing the momentum direction are degenerate") {
    const auto r = sam_descent_counterexample(
        {0, 0, 1}, Eigen::Vector3cd::UnitX(), C0(1.0), Rotation::about_z(1.0));
    CHECK(r.degenerate);
    CHECK(r.distance < 1e-14);
  }
  SUBCASE("closed form |alpha| times the projected rotated momentum") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 60; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      Eigen::Vector3d axis(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-2 || axis.norm() < 1e-2) continue;
      Eigen::Vector3cd a(C0(u(rng), u(rng)), C0(u(rng), u(rng)), C0(u(rng), u(rng)));
      const C0 alpha(u(rng), u(rng));
      const Rotation rot = Rotation::from_axis_angle(axis, 0.3 + std::abs(u(rng)));
      const auto r = sam_descent_counterexample(k, a, alpha, rot);
      const double expected =
          std::abs(alpha) * coulomb_project(k, rot.apply(k).cast<C0>()).norm();
      CHECK(std::abs(r.distance - expected) < 1e-10);
    }
  }
}

TEST_CASE("gauge_sam_operators satisfy so(3) even though they cannot descend") {
  const auto sam = gauge_sam_operators(Domain::punctured());
  SampleSpec sp;
  sp.count = 50;
  sp.seed = 77;
  CHECK(check_so3(OperatorTripleRef(sam), sp, 1e-12).pass);
}

TEST_CASE("section_inner_product") {
  const SphereQuadrature quad = sphere_quadrature(24);

  SUBCASE("constant unit section integrates to 4 pi") {
    const auto ones = sample_section(
        quad, [](const Eigen::Vector3d&) { return Eigen::VectorXcd::Ones(1); });
    CHECK(std::abs(section_inner_product(ones, ones, quad) - 4.0 * kPi) < 1e-10);
  }

  SUBCASE("positivity and mesh-mismatch error") {
    const auto s = sample_section(quad, [](const Eigen::Vector3d& k) {
      Eigen::VectorXcd v(2);
      v << C0(k.x(), k.y()), C0(0.3, -k.z());
      return v;
    });
    const C0 norm2 = section_inner_product(s, s, quad);
    CHECK(norm2.real() > 0.0);
    CHECK(std::abs(norm2.imag()) < 1e-12);
    const SphereQuadrature other = sphere_quadrature(12);
    CHECK_THROWS_AS(section_inner_product(s, s, other), std::invalid_argument);
  }

  SUBCASE("rotations act unitarily on helicity-line sections") {
    const auto north = FiberFrame::helicity(1, ChartId::North);
    const auto south = FiberFrame::helicity(1, ChartId::South);
    auto line_section = [&](const Eigen::Vector3cd& poly_coeff) {
      return [&, poly_coeff](const Eigen::Vector3d& k) -> Eigen::VectorXcd {
        const Eigen::MatrixXcd e = k.z() >= 0.0 ? north.frame(k) : south.frame(k);
        Eigen::Vector3cd smooth(poly_coeff(0) * k.x() + poly_coeff(1),
                                poly_coeff(2) * k.y() * k.z(),
                                poly_coeff(0) - poly_coeff(2) * k.x());
        return e * (e.adjoint() * smooth);
      };
    };
    const auto psi1 = line_section({C0(0.4, 0.1), C0(-0.2, 0.7), C0(0.9, 0.0)});
    const auto psi2 = line_section({C0(0.1, -0.6), C0(0.8, 0.2), C0(0.0, 0.5)});
    const Rotation rot = Rotation::from_axis_angle({0.2, -0.7, 0.5}, 1.1);
    const Eigen::Matrix3cd rm = rot.matrix().cast<C0>();
    auto rotate = [&](const std::function<Eigen::VectorXcd(const Eigen::Vector3d&)>& f) {
      return [&, f](const Eigen::Vector3d& k) -> Eigen::VectorXcd {
        return rm * f(rot.inverse().apply(k));
      };
    };
    const C0 before = section_inner_product(sample_section(quad, psi1),
                                            sample_section(quad, psi2), quad);
    const C0 after = section_inner_product(sample_section(quad, rotate(psi1)),
                                           sample_section(quad, rotate(psi2)), quad);
    CHECK(std::abs(before - after) < 1e-8);
    CHECK(std::abs(before) > 1e-3);  // non-degenerate test data
  }
}
