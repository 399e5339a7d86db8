#include "amcheck/spin_matrices.hpp"

#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace amcheck {

std::array<Eigen::MatrixXcd, 3> spin_matrices(int s) {
  if (s < 0) throw std::domain_error("spin_matrices: spin must be a non-negative integer");
  const int dim = 2 * s + 1;
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd s3 = Eigen::MatrixXcd::Zero(dim, dim);
  // basis index i corresponds to m = s - i
  for (int i = 0; i < dim; ++i) {
    const double m = s - i;
    s3(i, i) = m;
    if (i > 0) {
      // S_+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
      sp(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
  }
  const Eigen::MatrixXcd sm = sp.adjoint();
  const std::complex<double> i2(0.0, 2.0);
  return {(sp + sm) / 2.0, (sp - sm) / i2, s3};
}

std::array<Eigen::Matrix3cd, 3> spin1_cartesian() {
  auto eps = [](int a, int b, int c) -> double {
    if (a == b || b == c || a == c) return 0.0;
    return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
  };
  std::array<Eigen::Matrix3cd, 3> g;
  const std::complex<double> mi(0.0, -1.0);
  for (int n = 0; n < 3; ++n)
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) g[n](p, q) = mi * eps(n, p, q);
  return g;
}

std::array<Eigen::MatrixXcd, 3> spin_tensor_square_generators() {
  const auto g3 = spin1_cartesian();
  const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
  std::array<Eigen::MatrixXcd, 3> g9;
  for (int n = 0; n < 3; ++n)
    g9[n] = Eigen::kroneckerProduct(g3[n], id) + Eigen::kroneckerProduct(id, g3[n]);
  return g9;
}

}  // namespace amcheck
