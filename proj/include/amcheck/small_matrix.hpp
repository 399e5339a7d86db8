#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <vector>

#include "amcheck/dual.hpp"

namespace amcheck {

/// Dense matrix over an arbitrary scalar ring (complex or nested duals).
/// Fibers here are tiny (at most 9x9), so no attempt at clever storage.
template <class S>
class SmallMat {
 public:
  SmallMat() : rows_(0), cols_(0) {}
  SmallMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0.0)) {}

  static SmallMat identity(int n) {
    SmallMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  SmallMat operator+(const SmallMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SmallMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  SmallMat operator-(const SmallMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SmallMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  SmallMat operator-() const {
    SmallMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  SmallMat operator*(const SmallMat& o) const {
    assert(cols_ == o.rows_);
    SmallMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& aik = (*this)(i, k);
        for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + aik * o(k, j);
      }
    return r;
  }

  template <class U>
  SmallMat scaled(const U& c) const {
    SmallMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }

  SmallMat adjoint() const {
    using std::conj;
    SmallMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

template <class S>
SmallMat<S> commutator_mat(const SmallMat<S>& a, const SmallMat<S>& b) {
  return a * b - b * a;
}

template <class S>
SmallMat<S> kron(const SmallMat<S>& a, const SmallMat<S>& b) {
  SmallMat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return r;
}

/// Matrix-vector action on a Vec3 of scalars (used for rotating dual
/// coordinates); the matrix must be 3x3.
template <class S>
Vec3<S> apply3(const SmallMat<S>& m, const Vec3<S>& x) {
  assert(m.rows() == 3 && m.cols() == 3);
  Vec3<S> r{S(0.0), S(0.0), S(0.0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] = r[i] + m(i, j) * x[j];
  return r;
}

inline Eigen::MatrixXcd to_eigen(const SmallMat<C0>& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

template <class S>
SmallMat<S> from_eigen(const Eigen::MatrixXcd& m) {
  SmallMat<S> r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = S(m(i, j));
  return r;
}

}  // namespace amcheck
