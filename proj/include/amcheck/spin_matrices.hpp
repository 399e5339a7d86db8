#pragma once

#include <Eigen/Dense>
#include <array>

namespace amcheck {

/// Spin-s generator triple (S_1, S_2, S_3) in the |s,m> ladder basis,
/// m = s..-s, so S_3 = diag(s, s-1, ..., -s). Integer s >= 0 only
/// (bosonic, non-projective representations).
std::array<Eigen::MatrixXcd, 3> spin_matrices(int s);

/// Cartesian spin-1 triple (S_n)_{pq} = -i eps_{npq}, the generators of
/// rotations on C^3 in the coordinate basis.
std::array<Eigen::Matrix3cd, 3> spin1_cartesian();

/// Rotation generator triple on C^9 = C^3 (x) C^3 (tensor-square
/// representation): G (x) I + I (x) G.
std::array<Eigen::MatrixXcd, 3> spin_tensor_square_generators();

}  // namespace amcheck
