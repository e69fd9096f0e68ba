#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pcomm/polynomial.hpp"
#include "pcomm/quaternion.hpp"

namespace pcomm {

template <class T>
Quaternion<T> poly_commutator_quat(const Polynomial<T>& p, const Quaternion<T>& a,
                                   const Quaternion<T>& b) {
  if (p.is_constant()) throw InvalidInput("polynomial commutator needs a nonconstant polynomial");
  return eval_poly(p, a * b) - eval_poly(p, b * a);
}

// First standard basis direction (i, j, k order) not parallel to Im(v),
// made orthogonal to Im(v) by one Gram-Schmidt step.  Not normalized.
template <class T>
Quaternion<T> orthogonal_imaginary(const Quaternion<T>& v) {
  const Quaternion<T> u = v.imag();
  if (u.is_zero()) throw InvalidInput("orthogonal_imaginary: imaginary part is zero");
  const T n2 = u.imag_norm2();
  const Quaternion<T> basis[3] = {Quaternion<T>::unit_i(), Quaternion<T>::unit_j(),
                                  Quaternion<T>::unit_k()};
  for (const auto& e : basis) {
    Quaternion<T> r = e - (imag_dot(e, u) / n2) * u;
    if constexpr (ScalarTraits<T>::exact) {
      if (!r.is_zero()) return r;
    } else {
      // reject directions within ~1e-6 rad of u
      if (r.imag_norm2() > 1e-12) return r;
    }
  }
  throw NumericalFailure("orthogonal_imaginary: no usable basis direction");
}

// b with b w b^{-1} = -w for purely imaginary w != 0.  The float backend
// returns a unit vector; the exact backend keeps the unnormalized
// Gram-Schmidt vector, which conjugates identically.
template <class T>
Quaternion<T> negating_conjugator(const Quaternion<T>& w) {
  if (!w.is_pure()) throw InvalidInput("negating_conjugator: w must be purely imaginary");
  if (w.is_zero()) throw InvalidInput("negating_conjugator: w must be nonzero");
  Quaternion<T> b = orthogonal_imaginary(w);
  if constexpr (!ScalarTraits<T>::exact) b = b / norm(b);
  return b;
}

// gamma != 0 with gamma^{-1} alpha gamma = Re(alpha) + |Im(alpha)| i.
// Built from the half-angle rotation carrying i to Im(alpha)/|Im(alpha)|;
// directions with negative i-component are first flipped by j.
QuaternionD complexifying_conjugator(const QuaternionD& alpha);

struct QuatSolution {
  QuaternionD a;
  QuaternionD b;
  double t = 0.0;
  double residual = 0.0;
  OddCase case_tag = OddCase::HasOddTerm;
};

// (a, b) with p(ab) - p(ba) = v for purely imaginary v.  Float inputs with
// |Re v| <= 1e-12 (1 + |v|) are accepted and their real part is dropped.
QuatSolution solve_polycomm_quat(const PolynomialD& p, const QuaternionD& v);

struct QuatFactorization {
  QuatSolution first;   // p[first.a, first.b]  = gamma j gamma^{-1}
  QuatSolution second;  // p[second.a, second.b] = gamma (-Re(alpha) j + |Im alpha| k) gamma^{-1}
  QuaternionD factor1;
  QuaternionD factor2;
  QuaternionD gamma;
  double residual = 0.0;  // |factor1 * factor2 - alpha|
};

QuatFactorization factor_two_polycomm_quat(const PolynomialD& p, const QuaternionD& alpha);

// Rational quaternions alpha, beta with p(alpha beta) != p(beta alpha).
// Tries a fixed list of basis pairs first, then seeded random rationals.
struct NoncommutingPair {
  QuaternionQ alpha;
  QuaternionQ beta;
  QuaternionQ value;  // p(alpha beta) - p(beta alpha)
  std::size_t trials = 0;
};

NoncommutingPair find_nonvanishing_pair(const PolynomialQ& p, std::uint64_t seed = 0,
                                        std::size_t max_random_trials = 10000);

}  // namespace pcomm
