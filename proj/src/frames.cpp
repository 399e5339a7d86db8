#include "amcheck/frames.hpp"

#include <cmath>
#include <stdexcept>

namespace amcheck {

namespace detail {

/// Type-erased frame evaluator. Plain dual depths serve coefficient
/// derivatives; the Dual1-wrapped depths serve differentiation along a
/// rotation parameter on top of coefficient derivatives.
struct FrameImpl {
  virtual ~FrameImpl() = default;
  virtual SmallMat<C0> eval(const Vec3<C0>&) const = 0;
  virtual SmallMat<C1> eval(const Vec3<C1>&) const = 0;
  virtual SmallMat<C2> eval(const Vec3<C2>&) const = 0;
  virtual SmallMat<C3> eval(const Vec3<C3>&) const = 0;
  virtual SmallMat<C4> eval(const Vec3<C4>&) const = 0;
  virtual SmallMat<Dual1<C0>> eval(const Vec3<Dual1<C0>>&) const = 0;
  virtual SmallMat<Dual1<C1>> eval(const Vec3<Dual1<C1>>&) const = 0;
  virtual SmallMat<Dual1<C2>> eval(const Vec3<Dual1<C2>>&) const = 0;
  virtual SmallMat<Dual1<C3>> eval(const Vec3<Dual1<C3>>&) const = 0;
};

template <class F>
struct FrameFn final : FrameImpl {
  F f;
  explicit FrameFn(F fn) : f(std::move(fn)) {}
  SmallMat<C0> eval(const Vec3<C0>& p) const override { return f(p); }
  SmallMat<C1> eval(const Vec3<C1>& p) const override { return f(p); }
  SmallMat<C2> eval(const Vec3<C2>& p) const override { return f(p); }
  SmallMat<C3> eval(const Vec3<C3>& p) const override { return f(p); }
  SmallMat<C4> eval(const Vec3<C4>& p) const override { return f(p); }
  SmallMat<Dual1<C0>> eval(const Vec3<Dual1<C0>>& p) const override { return f(p); }
  SmallMat<Dual1<C1>> eval(const Vec3<Dual1<C1>>& p) const override { return f(p); }
  SmallMat<Dual1<C2>> eval(const Vec3<Dual1<C2>>& p) const override { return f(p); }
  SmallMat<Dual1<C3>> eval(const Vec3<Dual1<C3>>& p) const override { return f(p); }
};

}  // namespace detail

namespace {

/// Rodrigues rotation about a fixed unit axis by a scalar-ring angle.
template <class S>
SmallMat<S> rotation_about(const Eigen::Vector3d& u, const S& angle) {
  using std::cos;
  using std::sin;
  SmallMat<S> k(3, 3);
  k(0, 1) = S(-u.z());
  k(0, 2) = S(u.y());
  k(1, 0) = S(u.z());
  k(1, 2) = S(-u.x());
  k(2, 0) = S(-u.y());
  k(2, 1) = S(u.x());
  const S s = sin(angle);
  const S one_minus_c = S(1.0) - cos(angle);
  return SmallMat<S>::identity(3) + k.scaled(s) + (k * k).scaled(one_minus_c);
}

template <class S>
SmallMat<S> ambient_rotation_generic(AmbientAction action, const Eigen::Vector3d& axis,
                                     const S& angle, int ambient_dim) {
  switch (action) {
    case AmbientAction::Identity:
      return SmallMat<S>::identity(ambient_dim);
    case AmbientAction::Vector:
      return rotation_about(axis, angle);
    case AmbientAction::TensorSquare: {
      const SmallMat<S> r = rotation_about(axis, angle);
      return kron(r, r);
    }
  }
  throw std::logic_error("unreachable");
}

/// Circular polarization frame transported from the chart pole by the
/// minimal rotation: smooth on the chart, orthonormal by construction.
struct HelicityFrameFn {
  int sign;           // sign of the helicity
  bool south;         // chart selector
  bool tensor_square; // |h| = 2

  template <class S>
  SmallMat<S> operator()(const Vec3<S>& p) const {
    const S r = dual_norm(p);
    const Vec3<S> kh{p[0] / r, p[1] / r, p[2] / r};
    // minimal rotation taking the pole (+/- z-hat) to k-hat
    const double pole = south ? -1.0 : 1.0;
    const S c = S(pole) * kh[2];
    const Vec3<S> w{S(-pole) * kh[1], S(pole) * kh[0], S(0.0)};
    SmallMat<S> kx(3, 3);
    kx(0, 1) = -w[2];
    kx(0, 2) = w[1];
    kx(1, 0) = w[2];
    kx(1, 2) = -w[0];
    kx(2, 0) = -w[1];
    kx(2, 1) = w[0];
    const SmallMat<S> rot =
        SmallMat<S>::identity(3) + kx + (kx * kx).scaled(S(1.0) / (S(1.0) + c));

    const double comp = south ? -sign : sign;
    SmallMat<S> pole_vec(3, 1);
    pole_vec(0, 0) = S(C0(1.0 / std::sqrt(2.0), 0.0));
    pole_vec(1, 0) = S(C0(0.0, comp / std::sqrt(2.0)));
    pole_vec(2, 0) = S(0.0);

    SmallMat<S> e = rot * pole_vec;
    if (tensor_square) e = kron(e, e);
    return e;
  }
};

struct ConstantFrameFn {
  Eigen::MatrixXcd m;
  template <class S>
  SmallMat<S> operator()(const Vec3<S>&) const {
    return from_eigen<S>(m);
  }
};

template <class S>
SmallMat<S> eval_frame(const detail::FrameImpl& f, const Vec3<S>& p) {
  return f.eval(p);
}

/// Connection term of the rotation generator: differentiates the
/// frame-comparison unitary U(t) = e(k)^dagger rho(R_n(t)) e(R_n(-t) k)
/// in the dual slot of t and multiplies by i.
struct ConnectionImpl final : detail::MatrixImpl {
  std::shared_ptr<const detail::FrameImpl> frame;
  AmbientAction action;
  int ambient_dim_, rank_, axis;

  ConnectionImpl(std::shared_ptr<const detail::FrameImpl> f, AmbientAction act, int n,
                 int r, int ax)
      : frame(std::move(f)), action(act), ambient_dim_(n), rank_(r), axis(ax) {}

  int rows() const override { return rank_; }
  int cols() const override { return rank_; }

  template <class S>
  SmallMat<S> connection(const Vec3<S>& p) const {
    using D = Dual1<S>;
    const D t(S(0.0), S(1.0));
    const Eigen::Vector3d u = Eigen::Vector3d::Unit(axis);
    const Vec3<D> pd{D(p[0]), D(p[1]), D(p[2])};
    const Vec3<D> moved = apply3(rotation_about(u, -t), pd);
    const SmallMat<D> e_here = eval_frame(*frame, pd);
    const SmallMat<D> e_moved = eval_frame(*frame, moved);
    const SmallMat<D> rho = ambient_rotation_generic(action, u, t, ambient_dim_);
    const SmallMat<D> phase = e_here.adjoint() * (rho * e_moved);
    SmallMat<S> out(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) out(i, j) = S(C0(0.0, 1.0)) * phase(i, j).d;
    return out;
  }

  SmallMat<C0> eval(const Vec3<C0>& p) const override { return connection(p); }
  SmallMat<C1> eval(const Vec3<C1>& p) const override { return connection(p); }
  SmallMat<C2> eval(const Vec3<C2>& p) const override { return connection(p); }
  SmallMat<C3> eval(const Vec3<C3>& p) const override { return connection(p); }
  SmallMat<C4> eval(const Vec3<C4>&) const override {
    throw std::runtime_error("frame connection: dual nesting depth exceeded");
  }
};

}  // namespace

FiberFrame::FiberFrame(std::shared_ptr<const detail::FrameImpl> impl,
                       AmbientAction action, int ambient_dim, int rank, int h,
                       Domain domain)
    : impl_(std::move(impl)),
      action_(action),
      ambient_dim_(ambient_dim),
      rank_(rank),
      h_(h),
      domain_(domain) {}

FiberFrame FiberFrame::helicity(int h, ChartId chart) {
  if (h == 0)
    throw std::domain_error("FiberFrame::helicity: use trivial_line() for h = 0");
  if (std::abs(h) > 2)
    throw std::domain_error("FiberFrame::helicity: |h| > 2 not supported");
  const bool south = chart == ChartId::South;
  const bool tensor = std::abs(h) == 2;
  HelicityFrameFn fn{h > 0 ? 1 : -1, south, tensor};
  return FiberFrame(std::make_shared<detail::FrameFn<HelicityFrameFn>>(fn),
                    tensor ? AmbientAction::TensorSquare : AmbientAction::Vector,
                    tensor ? 9 : 3, 1, h,
                    south ? Domain::south_chart() : Domain::north_chart());
}

FiberFrame FiberFrame::trivial_line() {
  ConstantFrameFn fn{Eigen::MatrixXcd::Ones(1, 1)};
  return FiberFrame(std::make_shared<detail::FrameFn<ConstantFrameFn>>(fn),
                    AmbientAction::Identity, 1, 1, 0, Domain::punctured());
}

FiberFrame FiberFrame::ambient_basis3() {
  ConstantFrameFn fn{Eigen::MatrixXcd::Identity(3, 3)};
  return FiberFrame(std::make_shared<detail::FrameFn<ConstantFrameFn>>(fn),
                    AmbientAction::Vector, 3, 3, 0, Domain::punctured());
}

FiberFrame FiberFrame::constant_line(const Eigen::VectorXcd& e) {
  if (std::abs(e.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("constant_line: frame vector must be unit norm");
  ConstantFrameFn fn{e};
  return FiberFrame(std::make_shared<detail::FrameFn<ConstantFrameFn>>(fn),
                    AmbientAction::Identity, static_cast<int>(e.size()), 1, 0,
                    Domain::punctured());
}

Eigen::MatrixXcd FiberFrame::frame(const Eigen::Vector3d& k) const {
  if (!domain_.contains(k))
    throw std::domain_error("FiberFrame: evaluation outside chart domain");
  return to_eigen(impl_->eval(lift_point<C0>(k)));
}

Eigen::MatrixXcd FiberFrame::ambient_rotation(const Rotation& r) const {
  return to_eigen(
      ambient_rotation_generic<C0>(action_, r.axis(), C0(r.angle()), ambient_dim_));
}

Eigen::MatrixXcd rotate_section_phase(const Rotation& r, const Eigen::Vector3d& k,
                                      const FiberFrame& frame) {
  const Eigen::Vector3d back = r.inverse().apply(k);
  if (!frame.domain().contains(k) || !frame.domain().contains(back))
    throw std::domain_error("rotate_section_phase: point leaves the chart domain");
  return frame.frame(k).adjoint() * frame.ambient_rotation(r) * frame.frame(back);
}

MatrixField frame_connection(const FiberFrame& frame, int axis) {
  return MatrixField::from_impl(std::make_shared<ConnectionImpl>(
      frame.impl(), frame.action(), frame.ambient_dim(), frame.rank(), axis));
}

ScalarField transition_phase(const FiberFrame& a, const FiberFrame& b) {
  if (a.rank() != 1 || b.rank() != 1 || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("transition_phase: rank-1 frames of equal ambient dim");
  auto fa = a.impl();
  auto fb = b.impl();
  return ScalarField::make([fa, fb](const auto& p) {
    const auto ea = eval_frame(*fa, p);
    const auto eb = eval_frame(*fb, p);
    return (ea.adjoint() * eb)(0, 0);
  });
}

FrameAtlas::FrameAtlas(int h)
    : charts_{FiberFrame::helicity(h, ChartId::North),
              FiberFrame::helicity(h, ChartId::South)} {}

FrameAtlas::FrameAtlas(FiberFrame global) : charts_{std::move(global)} {}

int FrameAtlas::ambient_dim() const { return charts_[0].ambient_dim(); }
int FrameAtlas::rank() const { return charts_[0].rank(); }

Eigen::MatrixXcd FrameAtlas::at(const Eigen::Vector3d& k) const {
  if (charts_.size() == 1) return charts_[0].frame(k);
  return k.z() >= 0.0 ? charts_[0].frame(k) : charts_[1].frame(k);
}

}  // namespace amcheck
