#include "pcomm/realize.hpp"

#include <algorithm>

#include "pcomm/quat_solver.hpp"

namespace pcomm {

std::vector<Rational> pick_distinct_preimages(const PolynomialQ& p, std::size_t n) {
  if (p.is_constant()) throw InvalidInput("pick_distinct_preimages: polynomial is constant");
  std::vector<Rational> alphas, values;
  // a nonconstant p takes each value at most deg(p) times
  for (long k = 0; alphas.size() < n; ++k) {
    const long cand = k % 2 ? (k + 1) / 2 : -(k / 2);
    const Rational a(cand);
    Rational v = p(a);
    if (std::find(values.begin(), values.end(), v) != values.end()) continue;
    alphas.push_back(a);
    values.push_back(std::move(v));
  }
  return alphas;
}

namespace {

using Vec = std::vector<Rational>;

std::size_t rank_of(std::vector<Vec> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Vec mat_vec(const MatrixQ& a, const Vec& v) {
  Vec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec e(n, Rational(0));
  e[i] = 1;
  return e;
}

// P with P^{-1} a P zero-diagonal; a traceless.
MatrixQ zero_diagonal_basis(const MatrixQ& a) {
  const std::size_t n = a.size();
  if (a.is_zero()) return MatrixQ::identity(n);
  if (n == 1) throw InvalidInput("traceless_to_zero_diagonal: 1x1 block with nonzero entry");
  if (a.is_scalar())
    throw InvalidInput("traceless_to_zero_diagonal: nonzero scalar block cannot be traceless");

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = unit(n, i);
      v[j] = 1;
      candidates.push_back(std::move(v));
    }

  std::vector<Vec> basis;
  for (const Vec& v : candidates) {
    Vec av = mat_vec(a, v);
    if (rank_of({v, av}) == 2) {
      basis = {v, std::move(av)};
      break;
    }
  }
  if (basis.empty())
    throw InvalidInput("traceless_to_zero_diagonal: matrix is central (no cyclic direction)");
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    auto trial = basis;
    trial.push_back(unit(n, i));
    if (rank_of(trial) == trial.size()) basis = std::move(trial);
  }

  MatrixQ p(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) p(r, c) = basis[c][r];
  const MatrixQ b = inverse(p) * a * p;  // b(0,0) = 0 since a v is the second basis vector

  MatrixQ tail(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) tail(i - 1, j - 1) = b(i, j);
  const MatrixQ q = zero_diagonal_basis(tail);

  MatrixQ lift = MatrixQ::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) lift(i, j) = q(i - 1, j - 1);
  return p * lift;
}

}  // namespace

ZeroDiagonalForm traceless_to_zero_diagonal(const MatrixQ& a) {
  if (sgn(trace(a)) != 0) throw InvalidInput("traceless_to_zero_diagonal: trace is nonzero");
  ZeroDiagonalForm out;
  out.p = zero_diagonal_basis(a);
  out.reduced = inverse(out.p) * a * out.p;
  if (!out.reduced.has_zero_diagonal())
    throw VerificationFailure("traceless_to_zero_diagonal: reduced matrix has nonzero diagonal");
  return out;
}

RealizationWitness<Rational> realize_traceless(const PolynomialQ& p, const MatrixQ& a) {
  if (p.is_constant()) throw InvalidInput("realize_traceless: polynomial is constant");
  const ZeroDiagonalForm z = traceless_to_zero_diagonal(a);
  return realize_zero_diagonal(p, a, std::optional<MatrixQ>(z.p));
}

TraceWitness nonzero_trace_witness(const PolynomialQ& p, std::size_t n, std::uint64_t seed) {
  if (p.is_constant()) throw InvalidInput("nonzero_trace_witness: polynomial is constant");
  if (n < 2) throw InvalidInput("nonzero_trace_witness: dimension must be at least 2");
  const NoncommutingPair pair = find_nonvanishing_pair(p, seed);

  TraceWitness w;
  w.alpha = pair.alpha;
  w.beta = pair.beta;
  w.trials = pair.trials;
  std::vector<QuaternionQ> da(n, QuaternionQ(Rational(1))), db(n, QuaternionQ(Rational(1)));
  da.back() = pair.alpha;
  db.back() = pair.beta;
  w.a = MatrixHQ::diagonal(da);
  w.b = MatrixHQ::diagonal(db);
  w.trace = trace(poly_commutator(p, w.a, w.b));
  return w;
}

}  // namespace pcomm
