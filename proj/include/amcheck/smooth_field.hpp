#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "amcheck/dual.hpp"
#include "amcheck/small_matrix.hpp"

namespace amcheck {

/// Momentum-space region a field or operator is defined on. Charts of
/// the lightcone exclude the origin and a cone around the axis where
/// their trivialization degenerates.
struct Domain {
  bool exclude_origin = false;
  double cone_minus_z = 0.0;  // excluded half-angle around -z (north chart)
  double cone_plus_z = 0.0;   // excluded half-angle around +z (south chart)

  static Domain entire() { return {}; }
  static Domain punctured() { return {true, 0.0, 0.0}; }
  static Domain north_chart(double cone = 0.2) { return {true, cone, 0.0}; }
  static Domain south_chart(double cone = 0.2) { return {true, 0.0, cone}; }

  bool contains(const Eigen::Vector3d& k) const {
    const double r = k.norm();
    if (exclude_origin && r <= 0.0) return false;
    if (r == 0.0) return true;
    const double polar = std::acos(std::clamp(k.z() / r, -1.0, 1.0));
    if (cone_minus_z > 0.0 && polar > std::numbers::pi - cone_minus_z) return false;
    if (cone_plus_z > 0.0 && polar < cone_plus_z) return false;
    return true;
  }

  Domain intersect(const Domain& other) const {
    Domain d;
    d.exclude_origin = exclude_origin || other.exclude_origin;
    d.cone_minus_z = std::max(cone_minus_z, other.cone_minus_z);
    d.cone_plus_z = std::max(cone_plus_z, other.cone_plus_z);
    if (d.cone_minus_z + d.cone_plus_z >= std::numbers::pi)
      throw std::domain_error("Domain: empty intersection");
    return d;
  }
};

// Type-erased smooth coefficient fields. A field evaluates at dual
// nesting depths 0..4; differentiation shifts the depth by one, so a
// quadruply nested query supports e.g. the derivative contract of a
// double commutator's coefficients.

namespace detail {

struct ScalarImpl {
  virtual ~ScalarImpl() = default;
  virtual C0 eval(const Vec3<C0>& p) const = 0;
  virtual C1 eval(const Vec3<C1>& p) const = 0;
  virtual C2 eval(const Vec3<C2>& p) const = 0;
  virtual C3 eval(const Vec3<C3>& p) const = 0;
  virtual C4 eval(const Vec3<C4>& p) const = 0;
};

struct MatrixImpl {
  virtual ~MatrixImpl() = default;
  virtual int rows() const = 0;
  virtual int cols() const = 0;
  virtual SmallMat<C0> eval(const Vec3<C0>& p) const = 0;
  virtual SmallMat<C1> eval(const Vec3<C1>& p) const = 0;
  virtual SmallMat<C2> eval(const Vec3<C2>& p) const = 0;
  virtual SmallMat<C3> eval(const Vec3<C3>& p) const = 0;
  virtual SmallMat<C4> eval(const Vec3<C4>& p) const = 0;
};

template <class F>
struct ScalarFn final : ScalarImpl {
  F f;
  explicit ScalarFn(F fn) : f(std::move(fn)) {}
  C0 eval(const Vec3<C0>& p) const override { return f(p); }
  C1 eval(const Vec3<C1>& p) const override { return f(p); }
  C2 eval(const Vec3<C2>& p) const override { return f(p); }
  C3 eval(const Vec3<C3>& p) const override { return f(p); }
  C4 eval(const Vec3<C4>& p) const override { return f(p); }
};

template <class F>
struct MatrixFn final : MatrixImpl {
  F f;
  int r_, c_;
  MatrixFn(F fn, int rows, int cols) : f(std::move(fn)), r_(rows), c_(cols) {}
  int rows() const override { return r_; }
  int cols() const override { return c_; }
  SmallMat<C0> eval(const Vec3<C0>& p) const override { return f(p); }
  SmallMat<C1> eval(const Vec3<C1>& p) const override { return f(p); }
  SmallMat<C2> eval(const Vec3<C2>& p) const override { return f(p); }
  SmallMat<C3> eval(const Vec3<C3>& p) const override { return f(p); }
  SmallMat<C4> eval(const Vec3<C4>& p) const override { return f(p); }
};

// Derivative w.r.t. base coordinate a, one dual layer up. Only depths
// 0..3 admit a further derivative (the nesting cap).
template <class S>
S eval_partial(const ScalarImpl& f, const Vec3<S>& p, int a) {
  return f.eval(seed_gradient(p)).d[a];
}

template <class S>
SmallMat<S> eval_partial_mat(const MatrixImpl& f, const Vec3<S>& p, int a) {
  const auto full = f.eval(seed_gradient(p));
  SmallMat<S> r(full.rows(), full.cols());
  for (int i = 0; i < full.rows(); ++i)
    for (int j = 0; j < full.cols(); ++j) r(i, j) = full(i, j).d[a];
  return r;
}

struct ScalarPartial final : ScalarImpl {
  std::shared_ptr<const ScalarImpl> f;
  int a;
  ScalarPartial(std::shared_ptr<const ScalarImpl> fn, int axis)
      : f(std::move(fn)), a(axis) {}
  C0 eval(const Vec3<C0>& p) const override { return eval_partial(*f, p, a); }
  C1 eval(const Vec3<C1>& p) const override { return eval_partial(*f, p, a); }
  C2 eval(const Vec3<C2>& p) const override { return eval_partial(*f, p, a); }
  C3 eval(const Vec3<C3>& p) const override { return eval_partial(*f, p, a); }
  C4 eval(const Vec3<C4>&) const override {
    throw std::runtime_error("smooth field: dual nesting depth exceeded");
  }
};

struct MatrixPartial final : MatrixImpl {
  std::shared_ptr<const MatrixImpl> f;
  int a;
  MatrixPartial(std::shared_ptr<const MatrixImpl> fn, int axis)
      : f(std::move(fn)), a(axis) {}
  int rows() const override { return f->rows(); }
  int cols() const override { return f->cols(); }
  SmallMat<C0> eval(const Vec3<C0>& p) const override { return eval_partial_mat(*f, p, a); }
  SmallMat<C1> eval(const Vec3<C1>& p) const override { return eval_partial_mat(*f, p, a); }
  SmallMat<C2> eval(const Vec3<C2>& p) const override { return eval_partial_mat(*f, p, a); }
  SmallMat<C3> eval(const Vec3<C3>& p) const override { return eval_partial_mat(*f, p, a); }
  SmallMat<C4> eval(const Vec3<C4>&) const override {
    throw std::runtime_error("smooth field: dual nesting depth exceeded");
  }
};

}  // namespace detail

template <class S>
Vec3<S> lift_point(const Eigen::Vector3d& k) {
  return {S(k.x()), S(k.y()), S(k.z())};
}

/// Smooth complex-valued coefficient function of momentum. Evaluation
/// returns the value and, through dual queries, exact derivatives.
/// Value semantics; cheap to copy (shared immutable implementation).
class ScalarField {
 public:
  ScalarField() : ScalarField(constant(0.0)) {}

  template <class F>
  static ScalarField make(F f) {
    return ScalarField(std::make_shared<detail::ScalarFn<F>>(std::move(f)));
  }
  static ScalarField constant(C0 c) {
    return make([c](const auto& p) {
      using S = std::decay_t<decltype(p[0])>;
      (void)p;
      return S(c);
    });
  }
  static ScalarField zero() { return constant(0.0); }
  /// k_a
  static ScalarField coordinate(int a) {
    return make([a](const auto& p) { return p[a]; });
  }
  /// |k|
  static ScalarField radius() {
    return make([](const auto& p) { return dual_norm(p); });
  }
  /// k_a / |k|
  static ScalarField unit_coordinate(int a) {
    return make([a](const auto& p) { return p[a] / dual_norm(p); });
  }

  template <class S>
  S eval(const Vec3<S>& p) const {
    return impl_->eval(p);
  }
  C0 value(const Eigen::Vector3d& k) const { return impl_->eval(lift_point<C0>(k)); }
  /// Value plus gradient via a seeded dual query.
  std::pair<C0, Vec3<C0>> value_grad(const Eigen::Vector3d& k) const {
    const C1 r = impl_->eval(seed_gradient(lift_point<C0>(k)));
    return {r.v, {r.d[0], r.d[1], r.d[2]}};
  }

  ScalarField partial(int a) const {
    return ScalarField(std::make_shared<detail::ScalarPartial>(impl_, a));
  }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) + fb->eval(p); });
  }
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) - fb->eval(p); });
  }
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) * fb->eval(p); });
  }
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b) {
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) / fb->eval(p); });
  }
  friend ScalarField operator*(C0 c, const ScalarField& a) {
    auto fa = a.impl_;
    return make([fa, c](const auto& p) {
      using S = std::decay_t<decltype(p[0])>;
      return S(c) * fa->eval(p);
    });
  }
  friend ScalarField operator-(const ScalarField& a) { return C0(-1.0) * a; }

  std::shared_ptr<const detail::ScalarImpl> impl() const { return impl_; }
  static ScalarField from_impl(std::shared_ptr<const detail::ScalarImpl> impl) {
    return ScalarField(std::move(impl));
  }

 private:
  explicit ScalarField(std::shared_ptr<const detail::ScalarImpl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::ScalarImpl> impl_;
};

/// Smooth matrix-valued field (fiber terms of differential operators).
class MatrixField {
 public:
  MatrixField() : MatrixField(zero(1, 1)) {}

  template <class F>
  static MatrixField make(F f, int rows, int cols) {
    return MatrixField(std::make_shared<detail::MatrixFn<F>>(std::move(f), rows, cols));
  }
  static MatrixField constant(const Eigen::MatrixXcd& m) {
    const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
    return make(
        [m, r, c](const auto& p) {
          using S = std::decay_t<decltype(p[0])>;
          (void)p;
          return from_eigen<S>(m);
        },
        r, c);
  }
  static MatrixField zero(int rows, int cols) {
    return constant(Eigen::MatrixXcd::Zero(rows, cols));
  }
  static MatrixField from_scalar(const ScalarField& f) {
    auto fi = f.impl();
    return make(
        [fi](const auto& p) {
          using S = std::decay_t<decltype(p[0])>;
          SmallMat<S> m(1, 1);
          m(0, 0) = fi->eval(p);
          return m;
        },
        1, 1);
  }
  /// diag(f, g): block generators on a rank-2 direct sum.
  static MatrixField diag2(const ScalarField& f, const ScalarField& g) {
    auto fi = f.impl();
    auto gi = g.impl();
    return make(
        [fi, gi](const auto& p) {
          using S = std::decay_t<decltype(p[0])>;
          SmallMat<S> m(2, 2);
          m(0, 0) = fi->eval(p);
          m(1, 1) = gi->eval(p);
          return m;
        },
        2, 2);
  }

  int rows() const { return impl_->rows(); }
  int cols() const { return impl_->cols(); }

  template <class S>
  SmallMat<S> eval(const Vec3<S>& p) const {
    return impl_->eval(p);
  }
  Eigen::MatrixXcd value(const Eigen::Vector3d& k) const {
    return to_eigen(impl_->eval(lift_point<C0>(k)));
  }

  MatrixField partial(int a) const {
    return MatrixField(std::make_shared<detail::MatrixPartial>(impl_, a));
  }

  friend MatrixField operator+(const MatrixField& a, const MatrixField& b) {
    check_shape(a, b);
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) + fb->eval(p); },
                a.rows(), a.cols());
  }
  friend MatrixField operator-(const MatrixField& a, const MatrixField& b) {
    check_shape(a, b);
    auto fa = a.impl_, fb = b.impl_;
    return make([fa, fb](const auto& p) { return fa->eval(p) - fb->eval(p); },
                a.rows(), a.cols());
  }
  friend MatrixField operator*(const ScalarField& s, const MatrixField& a) {
    auto fs = s.impl();
    auto fa = a.impl_;
    return make([fs, fa](const auto& p) { return fa->eval(p).scaled(fs->eval(p)); },
                a.rows(), a.cols());
  }
  friend MatrixField operator*(C0 c, const MatrixField& a) {
    auto fa = a.impl_;
    return make(
        [fa, c](const auto& p) {
          using S = std::decay_t<decltype(p[0])>;
          return fa->eval(p).scaled(S(c));
        },
        a.rows(), a.cols());
  }
  friend MatrixField matrix_commutator(const MatrixField& a, const MatrixField& b) {
    check_shape(a, b);
    auto fa = a.impl_, fb = b.impl_;
    return make(
        [fa, fb](const auto& p) { return commutator_mat(fa->eval(p), fb->eval(p)); },
        a.rows(), a.cols());
  }

  std::shared_ptr<const detail::MatrixImpl> impl() const { return impl_; }
  static MatrixField from_impl(std::shared_ptr<const detail::MatrixImpl> impl) {
    return MatrixField(std::move(impl));
  }

 private:
  explicit MatrixField(std::shared_ptr<const detail::MatrixImpl> impl)
      : impl_(std::move(impl)) {}
  static void check_shape(const MatrixField& a, const MatrixField& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw std::invalid_argument("MatrixField: shape mismatch");
  }
  std::shared_ptr<const detail::MatrixImpl> impl_;
};

}  // namespace amcheck
