#pragma once

#include <cmath>
#include <concepts>
#include <ostream>

#include "pcomm/errors.hpp"
#include "pcomm/scalar.hpp"

namespace pcomm {

// q = w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
template <class T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  Quaternion() : w(0), x(0), y(0), z(0) {}
  Quaternion(T w_, T x_ = T(0), T y_ = T(0), T z_ = T(0))
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion unit_i() { return {T(0), T(1), T(0), T(0)}; }
  static Quaternion unit_j() { return {T(0), T(0), T(1), T(0)}; }
  static Quaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }

  Quaternion real() const { return {w, T(0), T(0), T(0)}; }
  Quaternion imag() const { return {T(0), x, y, z}; }
  Quaternion conj() const { return {w, T(-x), T(-y), T(-z)}; }

  // w^2 + x^2 + y^2 + z^2, equal to q * conj(q).
  T norm2() const {
    T r = w * w;
    r += x * x;
    r += y * y;
    r += z * z;
    return r;
  }
  T imag_norm2() const {
    T r = x * x;
    r += y * y;
    r += z * z;
    return r;
  }

  bool is_zero() const {
    return ScalarTraits<T>::is_zero(w) && ScalarTraits<T>::is_zero(x) &&
           ScalarTraits<T>::is_zero(y) && ScalarTraits<T>::is_zero(z);
  }
  bool is_pure() const { return ScalarTraits<T>::is_zero(w); }
  bool is_real() const {
    return ScalarTraits<T>::is_zero(x) && ScalarTraits<T>::is_zero(y) &&
           ScalarTraits<T>::is_zero(z);
  }

  Quaternion inverse() const {
    if (is_zero()) throw InvalidInput("inverse of the zero quaternion");
    const T n2 = norm2();
    return {T(w / n2), T(-x / n2), T(-y / n2), T(-z / n2)};
  }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const T& s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) {
    return {T(-a.w), T(-a.x), T(-a.y), T(-a.z)};
  }
  friend Quaternion operator*(Quaternion a, const T& s) { return a *= s; }
  friend Quaternion operator*(const T& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(const Quaternion& a, const T& s) {
    return {T(a.w / s), T(a.x / s), T(a.y / s), T(a.z / s)};
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    T rw = a.w * b.w;
    rw -= a.x * b.x;
    rw -= a.y * b.y;
    rw -= a.z * b.z;
    T rx = a.w * b.x;
    rx += a.x * b.w;
    rx += a.y * b.z;
    rx -= a.z * b.y;
    T ry = a.w * b.y;
    ry -= a.x * b.z;
    ry += a.y * b.w;
    ry += a.z * b.x;
    T rz = a.w * b.z;
    rz += a.x * b.y;
    rz -= a.y * b.x;
    rz += a.z * b.w;
    return {std::move(rw), std::move(rx), std::move(ry), std::move(rz)};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
  }
};

using QuaternionQ = Quaternion<Rational>;
using QuaternionD = Quaternion<double>;

// Euclidean inner product of the imaginary parts.
template <class T>
T imag_dot(const Quaternion<T>& a, const Quaternion<T>& b) {
  T r = a.x * b.x;
  r += a.y * b.y;
  r += a.z * b.z;
  return r;
}

template <std::floating_point T>
T norm(const Quaternion<T>& q) {
  return std::sqrt(q.norm2());
}

template <class T>
Quaternion<T> identity_like(const Quaternion<T>&) {
  return Quaternion<T>(T(1));
}

template <class T, class C>
Quaternion<T> central_like(const Quaternion<T>&, const C& c) {
  return Quaternion<T>(ScalarTraits<T>::lift(c));
}

template <class T>
bool is_zero_element(const Quaternion<T>& q) {
  return q.is_zero();
}

inline QuaternionD to_float(const QuaternionQ& q) {
  return {q.w.get_d(), q.x.get_d(), q.y.get_d(), q.z.get_d()};
}

template <class T>
struct ScalarTraits<Quaternion<T>> {
  using Q = Quaternion<T>;
  static constexpr bool exact = ScalarTraits<T>::exact;
  static Q zero() { return Q(); }
  static Q one() { return Q(T(1)); }
  static bool is_zero(const Q& q) { return q.is_zero(); }
  static bool is_central(const Q& q) { return q.is_real(); }
  static Q inverse(const Q& q) { return q.inverse(); }
  static double magnitude2(const Q& q) {
    if constexpr (std::same_as<T, Rational>) {
      return q.norm2().get_d();
    } else {
      return static_cast<double>(q.norm2());
    }
  }
  template <class C>
  static Q lift(const C& c) {
    return Q(ScalarTraits<T>::lift(c));
  }
};

}  // namespace pcomm
