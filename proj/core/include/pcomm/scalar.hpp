#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "pcomm/errors.hpp"

namespace pcomm {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Per-scalar-ring capabilities consumed by the generic matrix,
// polynomial and realization code.
//
//   exact        arithmetic is exact and equality is meaningful
//   is_zero      exact test, or == 0.0 for floats
//   is_central   the element lies in the embedded base field
//   inverse      two-sided inverse of a nonzero element
//   magnitude2   nonnegative size used for pivot selection
//   lift         embeds a base-field coefficient as a central element
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_central(const Rational&) { return true; }
  static Rational inverse(const Rational& x) {
    if (is_zero(x)) throw InvalidInput("inverse of zero rational");
    Rational r = 1;
    r /= x;
    return r;
  }
  static double magnitude2(const Rational& x) {
    const double d = x.get_d();
    return d * d;
  }
  static Rational lift(const Rational& c) { return c; }
  static Rational lift(double c) { return Rational(c); }
  static Rational lift(long c) { return Rational(c); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static bool is_central(double) { return true; }
  static double inverse(double x) {
    if (x == 0.0) throw InvalidInput("inverse of zero");
    return 1.0 / x;
  }
  static double magnitude2(double x) { return x * x; }
  static double lift(const Rational& c) { return c.get_d(); }
  static double lift(double c) { return c; }
  static double lift(long c) { return static_cast<double>(c); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static bool is_central(const Complex&) { return true; }
  static Complex inverse(const Complex& x) {
    if (is_zero(x)) throw InvalidInput("inverse of zero");
    return 1.0 / x;
  }
  static double magnitude2(const Complex& x) { return std::norm(x); }
  static Complex lift(const Rational& c) { return {c.get_d(), 0.0}; }
  static Complex lift(double c) { return {c, 0.0}; }
  static Complex lift(long c) { return {static_cast<double>(c), 0.0}; }
  static Complex lift(const Complex& c) { return c; }
};

// identity_like / central_like give the unit and the central scalar c*1 in
// the ring an element lives in.  Matrix and quaternion overloads are found
// by ADL; the scalar ones must be visible before the generic templates.
inline Rational identity_like(const Rational&) { return Rational(1); }
inline double identity_like(double) { return 1.0; }
inline Complex identity_like(const Complex&) { return {1.0, 0.0}; }

template <class C>
Rational central_like(const Rational&, const C& c) {
  return ScalarTraits<Rational>::lift(c);
}
template <class C>
double central_like(double, const C& c) {
  return ScalarTraits<double>::lift(c);
}
template <class C>
Complex central_like(const Complex&, const C& c) {
  return ScalarTraits<Complex>::lift(c);
}

inline bool is_zero_element(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_element(double x) { return x == 0.0; }
inline bool is_zero_element(const Complex& x) { return x == Complex{}; }

// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact
// rational in canonical form.
Rational parse_rational(const std::string& text);
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace pcomm
