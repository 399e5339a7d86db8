#include <doctest.h>

#include "amcheck/representations.hpp"

using namespace amcheck;

namespace {

const C0 kI(0.0, 1.0);

SampleSpec spec(std::uint64_t seed = 42) {
  SampleSpec s;
  s.count = 100;
  s.seed = seed;
  return s;
}

double so3_matrix_defect(const std::array<Eigen::MatrixXcd, 3>& s) {
  double worst = 0.0;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      if (m == n) continue;
      const int p = 3 - m - n;
      const double eps = (n - m + 3) % 3 == 1 ? 1.0 : -1.0;
      worst = std::max(
          worst, (s[m] * s[n] - s[n] * s[m] - kI * eps * s[p]).cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace

TEST_CASE("spin_matrices: ladder construction") {
  SUBCASE("s = 0 is the zero triple") {
    const auto s = spin_matrices(0);
    for (const auto& m : s) {
      CHECK(m.rows() == 1);
      CHECK(m.cwiseAbs().maxCoeff() < 1e-15);
    }
  }

  SUBCASE("s = 1: S_3 = diag(1, 0, -1) and [S_1, S_2] = i S_3") {
    const auto s = spin_matrices(1);
    Eigen::Vector3cd diag = s[2].diagonal();
    CHECK(std::abs(diag(0) - C0(1.0)) < 1e-14);
    CHECK(std::abs(diag(1)) < 1e-14);
    CHECK(std::abs(diag(2) + C0(1.0)) < 1e-14);
    CHECK((s[0] * s[1] - s[1] * s[0] - kI * s[2]).cwiseAbs().maxCoeff() < 1e-13);
  }

  SUBCASE("so(3) relations and Casimir for s = 0, 1, 2, 3") {
    for (int sv = 0; sv <= 3; ++sv) {
      const auto s = spin_matrices(sv);
      CHECK(so3_matrix_defect(s) < 1e-13);
      Eigen::MatrixXcd casimir = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
      const Eigen::MatrixXcd expectation =
          sv * (sv + 1.0) * Eigen::MatrixXcd::Identity(2 * sv + 1, 2 * sv + 1);
      CHECK((casimir - expectation).cwiseAbs().maxCoeff() < 1e-12);
      // hermiticity
      for (const auto& m : s) CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  SUBCASE("negative spin is a domain error") {
    CHECK_THROWS_AS(spin_matrices(-1), std::domain_error);
  }
}

TEST_CASE("spin1_cartesian satisfies so(3) and matches the epsilon table") {
  const auto g = spin1_cartesian();
  CHECK(so3_matrix_defect({g[0], g[1], g[2]}) < 1e-14);
  CHECK(std::abs(g[2](0, 1) - C0(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(g[2](1, 0) - C0(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(g[0](0, 0)) < 1e-15);
}

TEST_CASE("build_massive_jsl: the Wigner split") {
  SUBCASE("mass must be positive") {
    CHECK_THROWS_AS(build_massive_jsl(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(build_massive_jsl(1, -2.0), std::domain_error);
  }

  SUBCASE("s = 0: spin vanishes and J = L") {
    const auto split = build_massive_jsl(0, 1.0);
    const SampleSpec sp = spec();
    CHECK(max_coefficient_distance(split.spin.ops[0],
                                   DiffOperator::zero(1, Domain::entire()), sp) <
          1e-15);
    for (int n = 0; n < 3; ++n)
      CHECK(max_coefficient_distance(split.total.ops[n], split.orbital.ops[n], sp) <
            1e-15);
  }

  SUBCASE("s = 1 and s = 2: so(3), vector operators, commutation") {
    for (const int s : {1, 2}) {
      const auto split = build_massive_jsl(s, 1.0);
      const SampleSpec sp = spec(100 + s);
      CHECK(check_so3(split.total.ref(), sp, 1e-10).pass);
      CHECK(check_so3(split.spin.ref(), sp, 1e-10).pass);
      CHECK(check_so3(split.orbital.ref(), sp, 1e-10).pass);
      CHECK(check_commuting(split.spin.ref(), split.orbital.ref(), sp, 1e-10).pass);
      CHECK(check_vector_operator(split.spin.ref(), split.total.ref(), sp, 1e-10).pass);
      CHECK(
          check_vector_operator(split.orbital.ref(), split.total.ref(), sp, 1e-10).pass);
      CHECK(energy_preservation_defect(split.total, sp) < 1e-10);
      // internal / external structure of the split
      const auto pts = sample_domain(Domain::entire(), sp);
      for (const auto& k : pts) {
        for (int n = 0; n < 3; ++n) {
          const auto cs = split.spin.ops[n].coefficients(k);
          for (const auto& d : cs.drift) CHECK(std::abs(d) < 1e-15);
          const auto co = split.orbital.ops[n].coefficients(k);
          CHECK(co.fiber.cwiseAbs().maxCoeff() < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("block_helicity_generators commute and fail so(3)") {
  for (const int h : {1, 2}) {
    const auto blk = block_helicity_generators(h, Domain::punctured());
    const auto rep = check_so3(blk, spec(7 + h), 1e-8);
    CHECK(!rep.pass);
    CHECK(rep.max_residual > 0.1);
    CHECK(check_commuting(blk, blk, spec(7 + h), 1e-12).pass);
  }
}

TEST_CASE("randomized triviality certificates (internal so(3) triples)") {
  SUBCASE("rank 1: so(3)-satisfying triples are uniformly small") {
    const auto cert = nogo1_rank1_certificate(2000, 91);
    CHECK(cert.pass);
    CHECK(cert.violations == 0);
    CHECK(cert.so3_passing > 0);
    CHECK(cert.worst_conditional < 1e-7);
  }
  SUBCASE("rank 2: so(3)-satisfying triples have vanishing Casimir") {
    const auto cert = nogo1_rank2_casimir_certificate(2000, 92);
    CHECK(cert.pass);
    CHECK(cert.violations == 0);
    CHECK(cert.so3_passing > 0);
    CHECK(cert.worst_conditional < 1e-7);
  }
}

TEST_CASE("derivative contract holds on every registered coefficient field") {
  const auto reg = registered_coefficient_fields();
  CHECK(!reg.scalars.empty());
  CHECK(!reg.matrices.empty());
  SampleSpec sp;
  sp.count = 40;
  sp.seed = 4242;
  for (const auto& f : reg.scalars)
    CHECK_MESSAGE(derivative_contract_defect(f.field, f.domain, sp) < 1e-7, f.name);
  for (const auto& f : reg.matrices)
    CHECK_MESSAGE(derivative_contract_defect(f.field, f.domain, sp) < 1e-7, f.name);
}
