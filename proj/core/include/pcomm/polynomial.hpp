#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "pcomm/errors.hpp"
#include "pcomm/scalar.hpp"

namespace pcomm {

// p(x) = sum_k coeffs[k] x^k, constant term first.  The stored list never
// ends in a zero; the zero polynomial has an empty list and degree -1.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(std::size_t k, C c = C(1)) {
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  C leading() const { return coeffs_.empty() ? C(0) : coeffs_.back(); }

  // Value at a base-field scalar (Horner).
  C operator()(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) os << (k ? ", " : "") << p.coeffs_[k];
    return os << ']';
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialD = Polynomial<double>;

PolynomialD to_float(const PolynomialQ& p);

// p(x) in the unital ring containing x; x^0 is that ring's identity.
template <class C, class X>
X eval_poly(const Polynomial<C>& p, const X& x) {
  if (p.is_zero()) return central_like(x, C(0));
  const auto& c = p.coeffs();
  X acc = central_like(x, c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * x;
    acc = acc + central_like(x, c[k]);
  }
  return acc;
}

// p(x) when the ambient ring has no identity: only positive powers of x
// are formed, so p must have a zero constant term.
template <class C, class X>
X eval_poly_nonunital(const Polynomial<C>& p, const X& x) {
  if (p.coeff(0) != C(0))
    throw InvalidInput("polynomial with nonzero constant term in a non-unital ring");
  if (p.is_zero()) throw InvalidInput("zero polynomial in a non-unital ring");
  const auto& c = p.coeffs();
  X power = x;
  X acc = central_like(x, c[1]) * x;
  for (std::size_t k = 2; k < c.size(); ++k) {
    power = power * x;
    acc = acc + central_like(x, c[k]) * power;
  }
  return acc;
}

enum class OddCase { EvenOnly, HasOddTerm };

// Reduction of p to an odd function of a purely imaginary quaternion w:
//   EvenOnly:   p(s + w) - p(s - w) = 2 h(|w|^2) w   (with s = 1)
//   HasOddTerm: p(w) - p(-w)        = 2 h(|w|^2) w
template <class C>
struct OddFactor {
  OddCase case_tag = OddCase::HasOddTerm;
  Polynomial<C> h;
  C s = C(1);
};

template <class C>
OddFactor<C> derive_odd_factor(const Polynomial<C>& p) {
  if (p.is_constant()) throw InvalidInput("derive_odd_factor: polynomial is constant");
  const auto& c = p.coeffs();
  bool has_odd = false;
  for (std::size_t k = 1; k < c.size(); k += 2)
    if (c[k] != C(0)) has_odd = true;

  OddFactor<C> f;
  if (has_odd) {
    // h(t) = sum_m c_{2m+1} (-1)^m t^m
    f.case_tag = OddCase::HasOddTerm;
    std::vector<C> h((c.size()) / 2 + 1, C(0));
    for (std::size_t m = 0; 2 * m + 1 < c.size(); ++m) h[m] = (m % 2 ? C(-1) : C(1)) * c[2 * m + 1];
    f.h = Polynomial<C>(std::move(h));
    return f;
  }

  // h(t) = sum_m c_{2m} sum_{l odd <= 2m} C(2m, l) s^{2m-l} (-1)^{(l-1)/2} t^{(l-1)/2}, s = 1
  f.case_tag = OddCase::EvenOnly;
  f.s = C(1);
  std::vector<C> h(c.size() / 2 + 1, C(0));
  for (std::size_t m = 1; 2 * m < c.size(); ++m) {
    const std::size_t n = 2 * m;
    if (c[n] == C(0)) continue;
    C binom(1);  // C(n, l) built incrementally over all l
    for (std::size_t l = 0; l <= n; ++l) {
      if (l > 0) {
        binom *= C(static_cast<long>(n - l + 1));
        binom /= C(static_cast<long>(l));
      }
      if (l % 2 == 0) continue;
      const std::size_t e = (l - 1) / 2;
      C term = binom * c[n];
      if (e % 2) term = -term;
      h[e] += term;
    }
  }
  f.h = Polynomial<C>(std::move(h));
  return f;
}

OddFactor<double> to_float(const OddFactor<Rational>& f);

// Real t with 2 t h(t^2) = target.  Scans t = +-2^k (k = -40..40, positive
// side first) for a sign change of 2 t h(t^2) - target, bisects, then polishes
// with a Newton step.  target = 0 returns 0.
double solve_odd_equation(const OddFactor<double>& f, double target);

// 2 t h(t^2)
double odd_equation_lhs(const OddFactor<double>& f, double t);

}  // namespace pcomm
