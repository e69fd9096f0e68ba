#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "pcomm/errors.hpp"
#include "pcomm/polynomial.hpp"
#include "pcomm/quaternion.hpp"
#include "pcomm/scalar.hpp"

namespace pcomm {

// Dense square matrix over a scalar ring S, row-major.  S may be
// noncommutative (quaternions); products keep operand order.
template <class S>
class Matrix {
 public:
  using Traits = ScalarTraits<S>;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, Traits::zero()) {}

  Matrix(std::initializer_list<std::initializer_list<S>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw InvalidInput("matrix rows must form a square array");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.n_) throw InvalidInput("matrix rows must form a square array");
      for (std::size_t j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) { return scalar(n, Traits::one()); }

  static Matrix scalar(std::size_t n, const S& s) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const S> entries() const { return data_; }

  std::vector<S> diagonal_entries() const {
    std::vector<S> d;
    d.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) d.push_back((*this)(i, i));
    return d;
  }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Part strictly below (above) the diagonal; everything else zero.
  Matrix strict_lower() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j) m(i, j) = (*this)(i, j);
    return m;
  }
  Matrix strict_upper() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& s) { return Traits::is_zero(s); });
  }
  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!Traits::is_zero((*this)(i, i))) return false;
    return true;
  }
  bool is_lower_triangular() const { return strict_upper().is_zero(); }
  bool is_upper_triangular() const { return strict_lower().is_zero(); }
  bool is_diagonal() const { return is_lower_triangular() && is_upper_triangular(); }

  // A central scalar matrix c*I with c in the base field.
  bool is_scalar() const {
    if (!is_diagonal()) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!Traits::is_central((*this)(i, i))) return false;
      if (!((*this)(i, i) == (*this)(0, 0))) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const S& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  // s * A multiplies every entry on the left, A * s on the right.
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const S& s) {
    Matrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] * s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void check_same(const Matrix& o) const {
    if (n_ != o.n_) throw InvalidInput("matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<S> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixC = Matrix<Complex>;
using MatrixHQ = Matrix<QuaternionQ>;
using MatrixHD = Matrix<QuaternionD>;

template <class S>
Matrix<S> identity_like(const Matrix<S>& m) {
  return Matrix<S>::identity(m.size());
}

template <class S, class C>
Matrix<S> central_like(const Matrix<S>& m, const C& c) {
  return Matrix<S>::scalar(m.size(), ScalarTraits<S>::lift(c));
}

template <class S>
bool is_zero_element(const Matrix<S>& m) {
  return m.is_zero();
}

template <class S>
S trace(const Matrix<S>& a) {
  S t = ScalarTraits<S>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

// Gauss-Jordan elimination with row pivoting.  Every row operation is a
// left multiplication, so over a division ring the accumulated product is
// the (two-sided) inverse.  Exact rings take the first nonzero pivot; float
// rings the largest one, and treat pivots below 1e-13 of the matrix scale as
// zero.
template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  using Traits = ScalarTraits<S>;
  const std::size_t n = a.size();
  Matrix<S> m = a;
  Matrix<S> inv = Matrix<S>::identity(n);

  double scale = 0.0;
  if constexpr (!Traits::exact)
    for (const S& s : a.entries()) scale = std::max(scale, Traits::magnitude2(s));
  const double threshold = scale * 1e-26;  // (1e-13)^2 relative, squared magnitudes

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if constexpr (Traits::exact) {
      for (std::size_t r = col; r < n; ++r)
        if (!Traits::is_zero(m(r, col))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        const double mag = Traits::magnitude2(m(r, col));
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
      if (best <= threshold) pivot = n;
    }
    if (pivot == n) throw SingularMatrix(col);

    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }

    const S pinv = Traits::inverse(m(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = pinv * m(col, j);
      inv(col, j) = pinv * inv(col, j);
    }

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || Traits::is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= factor * m(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

// G A G^{-1}
template <class S>
Matrix<S> similarity_conjugate(const Matrix<S>& g, const Matrix<S>& a) {
  return g * a * inverse(g);
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

// p(AB) - p(BA).  Works for any ring element type with *, -, and the
// identity_like / central_like hooks.
template <class C, class X>
X poly_commutator(const Polynomial<C>& p, const X& a, const X& b) {
  if (p.is_constant()) throw InvalidInput("polynomial commutator needs a nonconstant polynomial");
  return eval_poly(p, a * b) - eval_poly(p, b * a);
}

template <class S>
struct TelescopeReport {
  Matrix<S> lhs;
  Matrix<S> rhs;
  bool equal = false;
  double max_entry_deviation = 0.0;
};

// Compares p(AB) - p(BA) with sum_i a_i sum_{k<i} (AB)^k [A,B] (BA)^{i-1-k}.
// Exact rings require identical matrices; float rings use `tolerance` on the
// largest entry magnitude of the difference.
template <class C, class S>
TelescopeReport<S> telescoping_expand(const Polynomial<C>& p, const Matrix<S>& a,
                                      const Matrix<S>& b, double tolerance = 1e-9) {
  using Traits = ScalarTraits<S>;
  if (p.is_constant()) throw InvalidInput("telescoping_expand needs a nonconstant polynomial");
  const std::size_t n = a.size();
  const auto d = static_cast<std::size_t>(p.degree());

  const Matrix<S> ab = a * b;
  const Matrix<S> ba = b * a;
  const Matrix<S> comm = ab - ba;

  std::vector<Matrix<S>> ab_pow{Matrix<S>::identity(n)};
  std::vector<Matrix<S>> ba_pow{Matrix<S>::identity(n)};
  for (std::size_t k = 1; k < d; ++k) {
    ab_pow.push_back(ab_pow.back() * ab);
    ba_pow.push_back(ba_pow.back() * ba);
  }

  Matrix<S> rhs(n);
  for (std::size_t i = 1; i <= d; ++i) {
    const C& ai = p.coeff(i);
    if (ai == C(0)) continue;
    Matrix<S> inner(n);
    for (std::size_t k = 0; k < i; ++k) inner += ab_pow[k] * comm * ba_pow[i - 1 - k];
    rhs += Traits::lift(ai) * inner;
  }

  TelescopeReport<S> rep{poly_commutator(p, a, b), std::move(rhs), false, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const S diff = rep.lhs(i, j) - rep.rhs(i, j);
      rep.max_entry_deviation =
          std::max(rep.max_entry_deviation, std::sqrt(Traits::magnitude2(diff)));
    }
  if constexpr (Traits::exact) {
    rep.equal = rep.lhs == rep.rhs;
  } else {
    rep.equal = rep.max_entry_deviation <= tolerance;
  }
  return rep;
}

}  // namespace pcomm
