#include <doctest.h>

#include <numbers>
#include <random>

#include "amcheck/minkowski.hpp"

using namespace amcheck;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = {u(rng), u(rng), u(rng)};
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Rotation random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  return Rotation::from_axis_angle(random_unit(rng), ang(rng));
}

LorentzTransform random_lorentz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::Vector3d k(u(rng), u(rng), u(rng));
  return random_rotation(rng).embed() * boost_to(MomentumPoint(k, 1.0)) *
         random_rotation(rng).embed();
}

double metric_defect(const LorentzTransform& l) {
  const Eigen::Matrix4d eta = minkowski_metric();
  return (l.matrix().transpose() * eta * l.matrix() - eta).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("boost_to maps the rest momentum onto the mass shell") {
  SUBCASE("zero momentum gives the identity") {
    const auto l = boost_to(MomentumPoint({0, 0, 0}, 1.0));
    CHECK((l.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("m=1, k=(0,0,0.75)") {
    const auto l = boost_to(MomentumPoint({0, 0, 0.75}, 1.0));
    CHECK(l.matrix()(0, 0) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(l.matrix()(0, 3) == doctest::Approx(0.75).epsilon(1e-12));
    const FourVector rest{1, 0, 0, 0};
    const FourVector img = l.apply(rest);
    CHECK(std::abs(img.t - 1.25) < 1e-12);
    CHECK(std::abs(img.x) < 1e-12);
    CHECK(std::abs(img.y) < 1e-12);
    CHECK(std::abs(img.z - 0.75) < 1e-12);
  }
  SUBCASE("massless input is a domain error") {
    CHECK_THROWS_AS(boost_to(MomentumPoint({0, 0, 1}, 0.0)), std::domain_error);
  }
  SUBCASE("outputs are symmetric and metric preserving") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      const MomentumPoint p({u(rng), u(rng), u(rng)}, 0.5 + std::abs(u(rng)));
      const auto l = boost_to(p);
      CHECK(l.is_symmetric(1e-12));
      CHECK(metric_defect(l) < 1e-12);
      const FourVector img = l.apply(standard_momentum(p));
      CHECK((img.coords() - p.four_momentum().coords()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("standard_boost_lightlike maps the reference null vector to k") {
  SUBCASE("reference momentum gives the identity") {
    const auto l = standard_boost_lightlike(MomentumPoint({0, 0, 1}, 0.0));
    CHECK((l.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("k = 2 z-hat is the pure z-boost of rapidity ln 2") {
    const auto l = standard_boost_lightlike(MomentumPoint({0, 0, 2}, 0.0));
    const FourVector img = l.apply({1, 0, 0, 1});
    CHECK(std::abs(img.t - 2.0) < 1e-12);
    CHECK(std::abs(img.z - 2.0) < 1e-12);
    CHECK(std::abs(l.matrix()(0, 0) - std::cosh(std::log(2.0))) < 1e-12);
  }
  SUBCASE("k = x-hat") {
    const auto l = standard_boost_lightlike(MomentumPoint({1, 0, 0}, 0.0));
    const FourVector img = l.apply({1, 0, 0, 1});
    CHECK(std::abs(img.t - 1.0) < 1e-12);
    CHECK(std::abs(img.x - 1.0) < 1e-12);
    CHECK(std::abs(img.y) < 1e-12);
    CHECK(std::abs(img.z) < 1e-12);
  }
  SUBCASE("|k| = 0 is rejected by the momentum type") {
    CHECK_THROWS_AS(MomentumPoint({0, 0, 0}, 0.0), std::domain_error);
  }
  SUBCASE("generic momenta land on the lightcone point") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-3) continue;
      const MomentumPoint p(k, 0.0);
      const FourVector img = standard_boost_lightlike(p).apply({1, 0, 0, 1});
      CHECK((img.coords() - p.four_momentum().coords()).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("little_group_element fixes the standard momentum") {
  std::mt19937_64 rng(23);

  SUBCASE("identity transform gives the identity") {
    const auto w = little_group_element(LorentzTransform::identity(),
                                        MomentumPoint({1, 0, 0}, 1.0));
    CHECK((w.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("massive little group of a rotation is that rotation") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
      const Rotation r = random_rotation(rng);
      const MomentumPoint p({u(rng), u(rng), u(rng)}, 1.0);
      const auto w = little_group_element(r.embed(), p);
      CHECK((w.matrix() - r.embed().matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  SUBCASE("massless z-rotation at the reference momentum") {
    const Rotation r = Rotation::about_z(0.8);
    const auto w = little_group_element(r.embed(), MomentumPoint({0, 0, 1}, 0.0));
    CHECK((w.matrix() - r.embed().matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("the output fixes the standard momentum") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-2) continue;
      for (const double mass : {0.0, 1.3}) {
        const MomentumPoint p(k, mass);
        const auto w = little_group_element(random_lorentz(rng), p);
        const FourVector ref = standard_momentum(p);
        CHECK((w.apply(ref).coords() - ref.coords()).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }

  SUBCASE("cocycle composition") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 40; ++i) {
      Eigen::Vector3d k(u(rng), u(rng), u(rng));
      if (k.norm() < 1e-2) continue;
      for (const double mass : {0.0, 0.7}) {
        const MomentumPoint p(k, mass);
        const auto l1 = random_lorentz(rng);
        const auto l2 = random_lorentz(rng);
        const MomentumPoint l2p(l2.apply(p.four_momentum()).spatial(), mass);
        const auto lhs = little_group_element(l1 * l2, p);
        const auto rhs = little_group_element(l1, l2p) * little_group_element(l2, p);
        CHECK((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }
}

TEST_CASE("decompose_iso2 inverts the standard embedding") {
  SUBCASE("identity") {
    const auto e = decompose_iso2(LorentzTransform::identity());
    CHECK(std::abs(e.theta) < 1e-14);
    CHECK(std::abs(e.alpha) < 1e-14);
    CHECK(std::abs(e.beta) < 1e-14);
  }
  SUBCASE("pure z-rotation") {
    const auto e = decompose_iso2(Rotation::about_z(0.9).embed());
    CHECK(e.theta == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(std::abs(e.alpha) < 1e-12);
    CHECK(std::abs(e.beta) < 1e-12);
  }
  SUBCASE("round trip on random parameters") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
      const Iso2Element in{u(rng), u(rng), u(rng)};
      const auto w = iso2_embed(in);
      const FourVector ref{1, 0, 0, 1};
      CHECK((w.apply(ref).coords() - ref.coords()).cwiseAbs().maxCoeff() < 1e-12);
      const auto out = decompose_iso2(w);
      CHECK(out.theta == doctest::Approx(in.theta).epsilon(1e-10));
      CHECK(out.alpha == doctest::Approx(in.alpha).epsilon(1e-10));
      CHECK(out.beta == doctest::Approx(in.beta).epsilon(1e-10));
      const auto back = iso2_embed(out);
      CHECK((back.matrix() - w.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("non-stabilizing input is rejected") {
    const auto boost = boost_to(MomentumPoint({0, 0, 0.5}, 1.0));
    CHECK_THROWS_AS(decompose_iso2(boost), std::invalid_argument);
  }
}

TEST_CASE("axis_of_rotation finds the fixed points") {
  SUBCASE("z-rotation by pi/3") {
    const auto axis = axis_of_rotation(Rotation::about_z(kPi / 3.0));
    REQUIRE(axis.has_value());
    CHECK((*axis - Eigen::Vector3d::UnitZ()).norm() < 1e-12);
  }
  SUBCASE("axis (1,1,1)/sqrt(3), angle 0.7") {
    const Eigen::Vector3d u = Eigen::Vector3d::Ones().normalized();
    const auto axis = axis_of_rotation(Rotation::from_axis_angle(u, 0.7));
    REQUIRE(axis.has_value());
    CHECK((*axis - u).norm() < 1e-12);
  }
  SUBCASE("identity reports every point fixed") {
    CHECK(!axis_of_rotation(Rotation::identity()).has_value());
  }
  SUBCASE("the axis is fixed for random rotations, including half turns") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
      const Rotation r = i % 7 == 0 ? Rotation::from_axis_angle(random_unit(rng), kPi)
                                    : random_rotation(rng);
      if (r.is_identity(1e-12)) continue;
      const auto axis = axis_of_rotation(r);
      REQUIRE(axis.has_value());
      CHECK((r.apply(*axis) - *axis).norm() < 1e-12);
      CHECK(std::abs(axis->norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rotation matrix / axis-angle round trips") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    const Rotation r = random_rotation(rng);
    const Rotation back = Rotation::from_matrix(r.matrix());
    CHECK((back.matrix() - r.matrix()).cwiseAbs().maxCoeff() < 1e-13);
    const Rotation rebuilt = Rotation::from_axis_angle(back.axis(), back.angle());
    CHECK((rebuilt.matrix() - r.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.matrix().transpose() * r.matrix() - Eigen::Matrix3d::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-13);
  }
}

TEST_CASE("LorentzTransform construction enforces the group invariants") {
  Eigen::Matrix4d bad = Eigen::Matrix4d::Identity();
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(LorentzTransform{bad}, std::invalid_argument);
  Eigen::Matrix4d reflect = Eigen::Matrix4d::Identity();
  reflect(1, 1) = -1.0;
  CHECK_THROWS_AS(LorentzTransform{reflect}, std::invalid_argument);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) CHECK(metric_defect(random_lorentz(rng)) < 1e-12);
}
