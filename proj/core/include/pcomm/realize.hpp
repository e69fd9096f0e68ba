#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcomm/matrix.hpp"
#include "pcomm/polynomial.hpp"
#include "pcomm/quaternion.hpp"
#include "pcomm/random.hpp"

namespace pcomm {

// alpha_1..alpha_n in Q with p(alpha_i) pairwise distinct, scanning
// 0, 1, -1, 2, -2, ... and keeping each candidate whose value is new.
std::vector<Rational> pick_distinct_preimages(const PolynomialQ& p, std::size_t n);

enum class Triangle { Lower, Upper };

// Unitriangular P (same shape as t) with P^{-1} t P = diag(t_11, ..., t_nn).
// The diagonal of t must be central and pairwise distinct; P is solved one
// entry at a time from t P = P diag(t), each step dividing by a central
// difference t_jj - t_ii.
template <class S>
Matrix<S> triangular_diagonalize(const Matrix<S>& t, Triangle shape) {
  using Traits = ScalarTraits<S>;
  const std::size_t n = t.size();
  if (shape == Triangle::Lower ? !t.is_lower_triangular() : !t.is_upper_triangular())
    throw InvalidInput("triangular_diagonalize: matrix is not triangular of the requested shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (!Traits::is_central(t(i, i)))
      throw InvalidInput("triangular_diagonalize: diagonal entry " + std::to_string(i) +
                         " is not a central scalar");
    for (std::size_t j = 0; j < i; ++j)
      if (Traits::is_zero(t(i, i) - t(j, j)))
        throw InvalidInput("triangular_diagonalize: repeated diagonal value at positions " +
                           std::to_string(j) + " and " + std::to_string(i));
  }

  Matrix<S> p = Matrix<S>::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (shape == Triangle::Upper) {
      for (std::size_t i = j; i-- > 0;) {
        S acc = Traits::zero();
        for (std::size_t k = i + 1; k <= j; ++k) acc += t(i, k) * p(k, j);
        p(i, j) = Traits::inverse(t(j, j) - t(i, i)) * acc;
      }
    } else {
      for (std::size_t i = j + 1; i < n; ++i) {
        S acc = Traits::zero();
        for (std::size_t k = j; k < i; ++k) acc += t(i, k) * p(k, j);
        p(i, j) = Traits::inverse(t(j, j) - t(i, i)) * acc;
      }
    }
  }
  return p;
}

// Data certifying target = p(a1 b1) - p(b1 a1):
//   a1 = G G1 G2^{-1} G^{-1},  b1 = G G2 D G1^{-1} G^{-1},
//   G1^{-1} L1 G1 = p(D) = G2^{-1} U1 G2,  G^{-1} target G = L - U.
template <class S>
struct RealizationWitness {
  PolynomialQ p;
  Matrix<S> target;
  Matrix<S> a1, b1;
  Matrix<S> g, g1, g2;
  Matrix<S> d;
  Matrix<S> l1, u1;
};

template <class S>
bool verify_witness(const RealizationWitness<S>& w) {
  return poly_commutator(w.p, w.a1, w.b1) == w.target;
}

// Realizes a matrix whose conjugate G^{-1} A G has zero diagonal (G = I by
// default) as a polynomial commutator.  Over noncommutative entry rings the
// caller must supply G.
template <class S>
RealizationWitness<S> realize_zero_diagonal(const PolynomialQ& p, const Matrix<S>& a,
                                            const std::optional<Matrix<S>>& g = std::nullopt) {
  using Traits = ScalarTraits<S>;
  const std::size_t n = a.size();
  if (p.is_constant()) throw InvalidInput("realize_zero_diagonal: polynomial is constant");
  if (n < 2) throw InvalidInput("realize_zero_diagonal: dimension must be at least 2");
  if (g && g->size() != n) throw InvalidInput("realize_zero_diagonal: similarity has wrong size");

  RealizationWitness<S> w;
  w.p = p;
  w.target = a;
  w.g = g.value_or(Matrix<S>::identity(n));
  const Matrix<S> g_inv = inverse(w.g);
  const Matrix<S> reduced = g_inv * a * w.g;
  if (!reduced.has_zero_diagonal())
    throw InvalidInput("realize_zero_diagonal: G^{-1} A G does not have zero diagonal");

  // reduced = L - U with L strictly lower, U strictly upper
  const Matrix<S> lower = reduced.strict_lower();
  const Matrix<S> upper = -reduced.strict_upper();

  const std::vector<Rational> alphas = pick_distinct_preimages(p, n);
  std::vector<S> d_diag, pd_diag;
  for (const auto& al : alphas) {
    d_diag.push_back(Traits::lift(al));
    pd_diag.push_back(Traits::lift(p(al)));
  }
  w.d = Matrix<S>::diagonal(d_diag);
  const Matrix<S> pd = Matrix<S>::diagonal(pd_diag);

  w.l1 = lower + pd;
  w.u1 = pd + upper;
  w.g1 = triangular_diagonalize(w.l1, Triangle::Lower);
  w.g2 = triangular_diagonalize(w.u1, Triangle::Upper);

  w.a1 = w.g * w.g1 * inverse(w.g2) * g_inv;
  w.b1 = w.g * w.g2 * w.d * inverse(w.g1) * g_inv;
  return w;
}

struct ZeroDiagonalForm {
  MatrixQ p;        // invertible
  MatrixQ reduced;  // p^{-1} a p, zero diagonal
};

// Similarity taking a traceless rational matrix to one with zero diagonal.
// Picks v (e_i first, then e_i + e_j) with Av off the line of v, moves to a
// basis starting v, Av so the (1,1) entry vanishes, and recurses on the
// trailing block.
ZeroDiagonalForm traceless_to_zero_diagonal(const MatrixQ& a);

RealizationWitness<Rational> realize_traceless(const PolynomialQ& p, const MatrixQ& a);

struct TraceWitness {
  MatrixHQ a;  // diag(1, ..., 1, alpha)
  MatrixHQ b;  // diag(1, ..., 1, beta)
  QuaternionQ alpha, beta;
  QuaternionQ trace;  // trace(p(ab) - p(ba)) = p(alpha beta) - p(beta alpha)
  std::size_t trials = 0;
};

TraceWitness nonzero_trace_witness(const PolynomialQ& p, std::size_t n, std::uint64_t seed = 0);

// g_m(y0; y1..ym) = sum over permutations d of {0..m} of
//   sign(d) y0^{d(0)} y1 y0^{d(1)} y2 ... ym y0^{d(m)}.
template <class X>
X gn_evaluate(const X& y0, std::span<const X> ys) {
  const std::size_t m = ys.size();
  if (m == 0) throw InvalidInput("gn_evaluate: need at least one substitution");
  if (m > 7) throw InvalidInput("gn_evaluate: m > 7 exceeds the factorial cost guard");

  std::vector<X> powers{identity_like(y0)};
  for (std::size_t k = 1; k <= m; ++k) powers.push_back(powers.back() * y0);

  X total = central_like(y0, 0L);
  std::vector<bool> used(m + 1, false);
  // depth-first over permutations so prefixes are shared
  auto rec = [&](auto&& self, std::size_t pos, const X& prefix, std::size_t inversions) -> void {
    for (std::size_t v = 0; v <= m; ++v) {
      if (used[v]) continue;
      std::size_t inv = inversions;
      for (std::size_t u = v + 1; u <= m; ++u)
        if (used[u]) ++inv;
      X next = pos == 0 ? X(powers[v]) : X(prefix * ys[pos - 1] * powers[v]);
      if (pos == m) {
        if (inv % 2)
          total -= next;
        else
          total += next;
      } else {
        used[v] = true;
        self(self, pos + 1, next, inv);
        used[v] = false;
      }
    }
  };
  rec(rec, 0, powers[0], 0);
  return total;
}

inline Rational random_like(const Rational&, Rng& rng) { return random_rational(rng, 7, 5); }
inline QuaternionQ random_like(const QuaternionQ&, Rng& rng) {
  return random_rational_quaternion(rng, 7, 5);
}
inline MatrixQ random_like(const MatrixQ& m, Rng& rng) {
  return random_rational_matrix(m.size(), rng, 7, 5);
}
inline MatrixHQ random_like(const MatrixHQ& m, Rng& rng) {
  return random_quaternion_matrix(m.size(), rng, 3, 3);
}

struct DegreeProbeResult {
  std::optional<int> estimated_degree;  // empty: degree > m_max
  std::size_t trials_per_degree = 0;
  std::vector<bool> vanish_pattern;  // index m-1: all trials of g_m vanished
};

// Least m <= m_max for which g_m(a; r1..rm) vanished on every random trial.
// Probabilistic: a nonvanishing trial proves degree > m, vanishing trials
// are evidence only.
template <class X>
DegreeProbeResult algebraic_degree_probe(const X& a, int m_max, std::size_t trials = 8,
                                         std::uint64_t seed = 0) {
  if (m_max < 1 || m_max > 7) throw InvalidInput("algebraic_degree_probe: m_max must be in 1..7");
  if (trials == 0) throw InvalidInput("algebraic_degree_probe: need at least one trial");
  DegreeProbeResult res;
  res.trials_per_degree = trials;
  for (int m = 1; m <= m_max; ++m) {
    Rng rng(derive_seed(seed, "degree_probe", static_cast<std::uint64_t>(m)));
    bool vanish = true;
    for (std::size_t t = 0; t < trials && vanish; ++t) {
      std::vector<X> rs;
      for (int k = 0; k < m; ++k) rs.push_back(random_like(a, rng));
      vanish = is_zero_element(gn_evaluate<X>(a, rs));
    }
    res.vanish_pattern.push_back(vanish);
    if (vanish) {
      res.estimated_degree = m;
      break;
    }
  }
  return res;
}

}  // namespace pcomm
