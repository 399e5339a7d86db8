#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

namespace amcheck {

/// Forward-mode dual number carrying three partial-derivative slots
/// (one per momentum coordinate). The scalar ring T may itself be a
/// Dual3, so nesting yields exact higher mixed partials:
///   Dual3<complex>                 -> first derivatives
///   Dual3<Dual3<complex>>          -> second derivatives, etc.
/// Base coordinates are real, so conj() commutes with differentiation.
template <class T>
struct Dual3 {
  T v{};
  std::array<T, 3> d{};

  Dual3() = default;
  template <class U>
    requires std::constructible_from<T, U>
  Dual3(const U& value) : v(value) {}  // NOLINT: implicit lift, zero derivative
  Dual3(T value, std::array<T, 3> deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

/// Single-slot dual used to differentiate along a one-parameter group
/// (rotation angle); composes with Dual3 scalars.
template <class T>
struct Dual1 {
  T v{};
  T d{};

  Dual1() = default;
  template <class U>
    requires std::constructible_from<T, U>
  Dual1(const U& value) : v(value) {}  // NOLINT
  Dual1(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

using C0 = std::complex<double>;
using C1 = Dual3<C0>;
using C2 = Dual3<C1>;
using C3 = Dual3<C2>;
using C4 = Dual3<C3>;

template <class S>
using Vec3 = std::array<S, 3>;

// ---- Dual3 arithmetic ----

template <class T>
Dual3<T> operator-(const Dual3<T>& a) {
  return {-a.v, {-a.d[0], -a.d[1], -a.d[2]}};
}

template <class T>
Dual3<T> operator+(const Dual3<T>& a, const Dual3<T>& b) {
  return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
}

template <class T>
Dual3<T> operator-(const Dual3<T>& a, const Dual3<T>& b) {
  return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
}

template <class T>
Dual3<T> operator*(const Dual3<T>& a, const Dual3<T>& b) {
  return {a.v * b.v,
          {a.d[0] * b.v + a.v * b.d[0], a.d[1] * b.v + a.v * b.d[1],
           a.d[2] * b.v + a.v * b.d[2]}};
}

template <class T>
Dual3<T> operator/(const Dual3<T>& a, const Dual3<T>& b) {
  const T q = a.v / b.v;
  return {q, {(a.d[0] - q * b.d[0]) / b.v, (a.d[1] - q * b.d[1]) / b.v,
              (a.d[2] - q * b.d[2]) / b.v}};
}

// Mixed ops with the underlying scalar ring (constants have zero derivative).
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator+(const Dual3<T>& a, const U& c) { return a + Dual3<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator+(const U& c, const Dual3<T>& a) { return Dual3<T>(c) + a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator-(const Dual3<T>& a, const U& c) { return a - Dual3<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator-(const U& c, const Dual3<T>& a) { return Dual3<T>(c) - a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator*(const Dual3<T>& a, const U& c) { return a * Dual3<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator*(const U& c, const Dual3<T>& a) { return Dual3<T>(c) * a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator/(const Dual3<T>& a, const U& c) { return a / Dual3<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual3<T> operator/(const U& c, const Dual3<T>& a) { return Dual3<T>(c) / a; }

template <class T>
Dual3<T> conj(const Dual3<T>& a) {
  using std::conj;
  return {conj(a.v), {conj(a.d[0]), conj(a.d[1]), conj(a.d[2])}};
}

template <class T>
Dual3<T> sqrt(const Dual3<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  const T twice = s + s;
  return {s, {a.d[0] / twice, a.d[1] / twice, a.d[2] / twice}};
}

template <class T>
Dual3<T> cos(const Dual3<T>& a) {
  using std::cos;
  using std::sin;
  const T c = cos(a.v);
  const T ms = -sin(a.v);
  return {c, {ms * a.d[0], ms * a.d[1], ms * a.d[2]}};
}

template <class T>
Dual3<T> sin(const Dual3<T>& a) {
  using std::cos;
  using std::sin;
  const T s = sin(a.v);
  const T c = cos(a.v);
  return {s, {c * a.d[0], c * a.d[1], c * a.d[2]}};
}

// ---- Dual1 arithmetic ----

template <class T>
Dual1<T> operator-(const Dual1<T>& a) { return {-a.v, -a.d}; }

template <class T>
Dual1<T> operator+(const Dual1<T>& a, const Dual1<T>& b) {
  return {a.v + b.v, a.d + b.d};
}

template <class T>
Dual1<T> operator-(const Dual1<T>& a, const Dual1<T>& b) {
  return {a.v - b.v, a.d - b.d};
}

template <class T>
Dual1<T> operator*(const Dual1<T>& a, const Dual1<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}

template <class T>
Dual1<T> operator/(const Dual1<T>& a, const Dual1<T>& b) {
  const T q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator+(const Dual1<T>& a, const U& c) { return a + Dual1<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator+(const U& c, const Dual1<T>& a) { return Dual1<T>(c) + a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator-(const Dual1<T>& a, const U& c) { return a - Dual1<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator-(const U& c, const Dual1<T>& a) { return Dual1<T>(c) - a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator*(const Dual1<T>& a, const U& c) { return a * Dual1<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator*(const U& c, const Dual1<T>& a) { return Dual1<T>(c) * a; }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator/(const Dual1<T>& a, const U& c) { return a / Dual1<T>(c); }
template <class T, class U>
  requires std::constructible_from<T, U>
Dual1<T> operator/(const U& c, const Dual1<T>& a) { return Dual1<T>(c) / a; }

template <class T>
Dual1<T> conj(const Dual1<T>& a) {
  using std::conj;
  return {conj(a.v), conj(a.d)};
}

template <class T>
Dual1<T> sqrt(const Dual1<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return {s, a.d / (s + s)};
}

template <class T>
Dual1<T> cos(const Dual1<T>& a) {
  using std::cos;
  using std::sin;
  return {cos(a.v), -sin(a.v) * a.d};
}

template <class T>
Dual1<T> sin(const Dual1<T>& a) {
  using std::cos;
  using std::sin;
  return {sin(a.v), cos(a.v) * a.d};
}

// ---- helpers ----

/// Strips all dual layers, returning the underlying complex value.
inline C0 value0(const C0& x) { return x; }
template <class T>
C0 value0(const Dual3<T>& x) { return value0(x.v); }
template <class T>
C0 value0(const Dual1<T>& x) { return value0(x.v); }

/// Lifts a real 3-vector into dual coordinates seeded for gradient
/// extraction: coordinate a carries unit derivative in slot a.
template <class S>
Vec3<Dual3<S>> seed_gradient(const Vec3<S>& p) {
  Vec3<Dual3<S>> q{Dual3<S>(p[0]), Dual3<S>(p[1]), Dual3<S>(p[2])};
  q[0].d[0] = S(1.0);
  q[1].d[1] = S(1.0);
  q[2].d[2] = S(1.0);
  return q;
}

template <class S>
S dual_norm(const Vec3<S>& p) {
  using std::sqrt;
  return sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

}  // namespace amcheck
