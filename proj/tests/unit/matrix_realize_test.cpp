#include <gtest/gtest.h>

#include "pcomm/realize.hpp"
#include "pcomm/random.hpp"
#include "support/oracles.hpp"

using namespace pcomm;

namespace {

const QuaternionQ kOne(Rational(1));
const QuaternionQ kZero;
const QuaternionQ kI = QuaternionQ::unit_i();
const QuaternionQ kJ = QuaternionQ::unit_j();
const QuaternionQ kK = QuaternionQ::unit_k();

PolynomialQ q_poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolynomialQ(std::move(v));
}

MatrixQ q_mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return MatrixQ::from_rows(r);
}

std::vector<Rational> rats(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

template <class S>
Matrix<S> zero_diagonal(Matrix<S> a) {
  for (std::size_t i = 0; i < a.size(); ++i) a(i, i) = ScalarTraits<S>::zero();
  return a;
}

MatrixQ make_traceless(MatrixQ a) {
  const std::size_t n = a.size();
  a(n - 1, n - 1) -= trace(a);
  return a;
}

// The identities the construction actually guarantees.
template <class S>
void expect_pipeline_identities(const RealizationWitness<S>& w) {
  const Matrix<S> gi = inverse(w.g);
  const Matrix<S> ab = w.a1 * w.b1, ba = w.b1 * w.a1;
  EXPECT_EQ(poly_commutator(w.p, w.a1, w.b1), w.target);
  EXPECT_EQ(eval_poly(w.p, ab), w.g * w.l1 * gi);
  EXPECT_EQ(eval_poly(w.p, ba), w.g * w.u1 * gi);
  EXPECT_EQ(ab, w.g * w.g1 * w.d * inverse(w.g1) * gi);
  EXPECT_EQ(ba, w.g * w.g2 * w.d * inverse(w.g2) * gi);
  EXPECT_TRUE(verify_witness(w));
}

}  // namespace

TEST(DistinctPreimages, ScanOrder) {
  EXPECT_EQ(pick_distinct_preimages(q_poly({0, 1}), 3), rats({0, 1, -1}));
  EXPECT_EQ(pick_distinct_preimages(q_poly({0, 0, 1}), 2), rats({0, 1}));
  // p(0) = p(1) = 0, so 1 is skipped and -1 (p = 2) is next in the scan
  EXPECT_EQ(pick_distinct_preimages(q_poly({0, -1, 1}), 2), rats({0, -1}));
  EXPECT_EQ(pick_distinct_preimages(q_poly({0, 0, 1}), 3), rats({0, 1, 2}));
  EXPECT_THROW(pick_distinct_preimages(q_poly({3}), 2), InvalidInput);
}

TEST(DistinctPreimages, ValuesAreDistinct) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const PolynomialQ p = random_rational_poly(1 + t % 6, rng);
    const auto xs = pick_distinct_preimages(p, 6);
    ASSERT_EQ(xs.size(), 6u);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(p(xs[i]), p(xs[j]));
  }
}

TEST(TriangularDiagonalize, DiagonalInputGivesIdentity) {
  const std::vector<Rational> d = rats({3, -1, 2});
  const MatrixQ t = MatrixQ::diagonal(d);
  EXPECT_EQ(triangular_diagonalize(t, Triangle::Lower), MatrixQ::identity(3));
  EXPECT_EQ(triangular_diagonalize(t, Triangle::Upper), MatrixQ::identity(3));
}

TEST(TriangularDiagonalize, UpperTwoByTwo) {
  const MatrixQ t = q_mat({{0, -1}, {0, 1}});
  const MatrixQ p = triangular_diagonalize(t, Triangle::Upper);
  EXPECT_EQ(p, q_mat({{1, -1}, {0, 1}}));
  EXPECT_EQ(inverse(p) * t * p, q_mat({{0, 0}, {0, 1}}));
}

TEST(TriangularDiagonalize, QuaternionStrictPart) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixHQ lower = random_quaternion_matrix(3, rng).strict_lower();
    MatrixHQ upper = random_quaternion_matrix(3, rng).strict_upper();
    for (std::size_t i = 0; i < 3; ++i) {
      lower(i, i) = QuaternionQ(Rational(static_cast<long>(i)));
      upper(i, i) = QuaternionQ(Rational(static_cast<long>(2 * i) - 1, 3));
    }
    const MatrixHQ pl = triangular_diagonalize(lower, Triangle::Lower);
    const MatrixHQ pu = triangular_diagonalize(upper, Triangle::Upper);
    EXPECT_TRUE((inverse(pl) * lower * pl).is_diagonal());
    EXPECT_EQ((inverse(pl) * lower * pl).diagonal_entries(), lower.diagonal_entries());
    EXPECT_TRUE((inverse(pu) * upper * pu).is_diagonal());
    EXPECT_TRUE(pl.is_lower_triangular());
    EXPECT_TRUE(pu.is_upper_triangular());
  }
}

TEST(TriangularDiagonalize, Rejections) {
  EXPECT_THROW(triangular_diagonalize(q_mat({{1, 0}, {5, 1}}), Triangle::Lower), InvalidInput);
  EXPECT_THROW(triangular_diagonalize(q_mat({{1, 0}, {5, 2}}), Triangle::Upper), InvalidInput);
  const MatrixHQ noncentral{{kI, kZero}, {kOne, kZero}};
  EXPECT_THROW(triangular_diagonalize(noncentral, Triangle::Lower), InvalidInput);
}

TEST(RealizeZeroDiagonal, WorkedSquareExample) {
  const MatrixQ a = q_mat({{0, 1}, {0, 0}});
  const auto w = realize_zero_diagonal(q_poly({0, 0, 1}), a);
  EXPECT_EQ(w.d, q_mat({{0, 0}, {0, 1}}));
  EXPECT_EQ(w.l1, q_mat({{0, 0}, {0, 1}}));
  EXPECT_EQ(w.u1, q_mat({{0, -1}, {0, 1}}));
  EXPECT_EQ(w.g1, MatrixQ::identity(2));
  EXPECT_EQ(w.g2, q_mat({{1, -1}, {0, 1}}));
  EXPECT_EQ(w.a1, q_mat({{1, 1}, {0, 1}}));
  EXPECT_EQ(w.b1, q_mat({{0, -1}, {0, 1}}));
  expect_pipeline_identities(w);
}

TEST(RealizeZeroDiagonal, ZeroTarget) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto w = realize_zero_diagonal(q_poly({1, 2, 1}), MatrixQ(n));
    EXPECT_EQ(w.a1, MatrixQ::identity(n));
    EXPECT_EQ(w.b1, w.d);
    EXPECT_TRUE(poly_commutator(w.p, w.a1, w.b1).is_zero());
  }
}

TEST(RealizeZeroDiagonal, RandomRational) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 4;
    const PolynomialQ p = random_rational_poly(1 + t % 5, rng);
    const auto w = realize_zero_diagonal(p, zero_diagonal(random_rational_matrix(n, rng)));
    expect_pipeline_identities(w);
  }
}

TEST(RealizeZeroDiagonal, QuaternionCubic) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const MatrixHQ a = zero_diagonal(random_quaternion_matrix(3, rng));
    const auto w = realize_zero_diagonal(q_poly({0, 0, 0, 1}), a);
    expect_pipeline_identities(w);
  }
}

TEST(RealizeZeroDiagonal, QuaternionWithSuppliedSimilarity) {
  const MatrixHQ g{{kJ, kZero}, {kI, kOne}};
  const MatrixHQ a{{kI, kJ}, {-kJ, kI}};
  const auto w = realize_zero_diagonal(q_poly({0, 1, 1}), a, std::optional<MatrixHQ>(g));
  expect_pipeline_identities(w);
}

TEST(RealizeZeroDiagonal, Rejections) {
  EXPECT_THROW(realize_zero_diagonal(q_poly({0, 1}), q_mat({{1, 0}, {0, -1}})), InvalidInput);
  EXPECT_THROW(realize_zero_diagonal(q_poly({0, 1}), q_mat({{0}})), InvalidInput);
  EXPECT_THROW(realize_zero_diagonal(q_poly({4}), MatrixQ(2)), InvalidInput);
}

// A1 B1 is similar to D, while L1 has diagonal p(D); the two agree only when
// p fixes every chosen preimage.
TEST(RealizeZeroDiagonal, ProductIsNotSimilarToL1InGeneral) {
  Rng rng(5);
  const MatrixQ a = zero_diagonal(random_rational_matrix(3, rng));
  const auto w = realize_zero_diagonal(q_poly({0, 0, 1}), a);
  EXPECT_EQ(w.d.diagonal_entries(), rats({0, 1, 2}));
  EXPECT_NE(w.a1 * w.b1, w.g * w.l1 * inverse(w.g));
  EXPECT_NE(trace(w.a1 * w.b1), trace(w.l1));
  expect_pipeline_identities(w);
}

TEST(TracelessReduction, DiagonalExample) {
  const MatrixQ a = q_mat({{1, 0}, {0, -1}});
  const ZeroDiagonalForm z = traceless_to_zero_diagonal(a);
  EXPECT_EQ(z.reduced, q_mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(z.p, q_mat({{1, 1}, {1, -1}}));
}

TEST(TracelessReduction, ZeroMatrix) {
  const ZeroDiagonalForm z = traceless_to_zero_diagonal(MatrixQ(3));
  EXPECT_EQ(z.p, MatrixQ::identity(3));
  EXPECT_TRUE(z.reduced.is_zero());
}

TEST(TracelessReduction, RandomFourByFour) {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const MatrixQ a = make_traceless(random_rational_matrix(2 + t % 4, rng));
    const ZeroDiagonalForm z = traceless_to_zero_diagonal(a);
    EXPECT_TRUE(z.reduced.has_zero_diagonal());
    EXPECT_EQ(inverse(z.p) * a * z.p, z.reduced);
  }
}

TEST(TracelessReduction, StructuredInputs) {
  // blocks that are scalar after the first step, and sparse inputs
  for (const MatrixQ& a : {q_mat({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
                           q_mat({{2, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
                           q_mat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}),
                           q_mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}})}) {
    const ZeroDiagonalForm z = traceless_to_zero_diagonal(a);
    EXPECT_TRUE(z.reduced.has_zero_diagonal()) << a;
    EXPECT_EQ(inverse(z.p) * a * z.p, z.reduced);
  }
}

TEST(TracelessReduction, Rejections) {
  EXPECT_THROW(traceless_to_zero_diagonal(q_mat({{1, 0}, {0, 1}})), InvalidInput);
  EXPECT_THROW(traceless_to_zero_diagonal(q_mat({{1, 2}, {3, 4}})), InvalidInput);
}

TEST(RealizeTraceless, Examples) {
  expect_pipeline_identities(realize_traceless(q_poly({0, 0, 1}), q_mat({{1, 0}, {0, -1}})));
  expect_pipeline_identities(realize_traceless(q_poly({0, 0, 0, 1}), q_mat({{0, 1}, {0, 0}})));
  const MatrixQ rot = q_mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  expect_pipeline_identities(realize_traceless(q_poly({1, -2, 0, 1}), rot));
}

TEST(RealizeTraceless, RandomRational) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const MatrixQ a = make_traceless(random_rational_matrix(2 + t % 4, rng));
    expect_pipeline_identities(realize_traceless(random_rational_poly(1 + t % 4, rng), a));
  }
}

TEST(TraceWitness, FixedFamily) {
  const auto lin = nonzero_trace_witness(q_poly({0, 1}), 2);
  EXPECT_EQ(lin.alpha, kI);
  EXPECT_EQ(lin.beta, kJ);
  EXPECT_EQ(lin.trace, Rational(2) * kK);

  const auto sq = nonzero_trace_witness(q_poly({0, 0, 1}), 2);
  EXPECT_EQ(sq.alpha, kI);
  EXPECT_EQ(sq.beta, kI + kJ);
  EXPECT_EQ(sq.trace, Rational(-4) * kK);

  const auto mixed = nonzero_trace_witness(q_poly({0, 1, 1}), 3);
  EXPECT_EQ(mixed.alpha, kI);
  EXPECT_EQ(mixed.beta, kJ);
  EXPECT_EQ(mixed.trace, Rational(2) * kK);
  EXPECT_EQ(mixed.a.size(), 3u);
  EXPECT_EQ(trace(poly_commutator(q_poly({0, 1, 1}), mixed.a, mixed.b)), mixed.trace);

  EXPECT_THROW(nonzero_trace_witness(q_poly({0, 1}), 1), InvalidInput);
}

TEST(TraceWitness, RationalTraceAlwaysVanishes) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const MatrixQ a = random_rational_matrix(3, rng), b = random_rational_matrix(3, rng);
    EXPECT_EQ(trace(poly_commutator(random_rational_poly(1 + t % 5, rng), a, b)), 0);
  }
}

TEST(Gn, FirstOrderIsCommutator) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const QuaternionQ a = random_rational_quaternion(rng), r = random_rational_quaternion(rng);
    const std::vector<QuaternionQ> ys{r};
    EXPECT_EQ(gn_evaluate<QuaternionQ>(a, ys), r * a - a * r);
    const MatrixQ x = random_rational_matrix(3, rng), s = random_rational_matrix(3, rng);
    const std::vector<MatrixQ> ms{s};
    EXPECT_EQ(gn_evaluate<MatrixQ>(x, ms), s * x - x * s);
  }
  const std::vector<QuaternionQ> ys{kJ};
  EXPECT_EQ(gn_evaluate<QuaternionQ>(kI, ys), Rational(-2) * kK);
}

TEST(Gn, SecondOrderVanishesOnQuaternions) {
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const QuaternionQ q = random_rational_quaternion(rng);
    const std::vector<QuaternionQ> ys{random_rational_quaternion(rng),
                                      random_rational_quaternion(rng)};
    EXPECT_TRUE(gn_evaluate<QuaternionQ>(q, ys).is_zero());
  }
}

// Direct expansion over all permutations, sign from the cycle structure.
TEST(Gn, MatchesNaiveExpansion) {
  Rng rng(11);
  const MatrixQ y0 = random_rational_matrix(2, rng);
  const std::vector<MatrixQ> ys{random_rational_matrix(2, rng), random_rational_matrix(2, rng),
                                random_rational_matrix(2, rng)};
  std::vector<int> perm{0, 1, 2, 3};
  MatrixQ total(2);
  do {
    int sign = 1;
    std::vector<bool> seen(4, false);
    for (int s = 0; s < 4; ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (int c = s; !seen[c]; c = perm[c]) {
        seen[c] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    auto pw = [&](int e) {
      MatrixQ r = MatrixQ::identity(2);
      for (int k = 0; k < e; ++k) r = r * y0;
      return r;
    };
    MatrixQ term = pw(perm[0]);
    for (int k = 1; k <= 3; ++k) term = term * ys[k - 1] * pw(perm[k]);
    total = sign > 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(gn_evaluate<MatrixQ>(y0, ys), total);
}

TEST(Gn, CostGuard) {
  const std::vector<Rational> eight(8, Rational(1));
  EXPECT_THROW(gn_evaluate<Rational>(Rational(2), eight), InvalidInput);
  EXPECT_THROW(gn_evaluate<Rational>(Rational(2), std::vector<Rational>{}), InvalidInput);
}

TEST(DegreeProbe, Examples) {
  EXPECT_EQ(algebraic_degree_probe(Rational(5), 4).estimated_degree, 1);
  EXPECT_EQ(algebraic_degree_probe(kJ, 4).estimated_degree, 2);
  const MatrixQ companion = q_mat({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
  const auto r = algebraic_degree_probe(companion, 5);
  EXPECT_EQ(r.estimated_degree, 3);
  EXPECT_EQ(r.vanish_pattern, (std::vector<bool>{false, false, true}));
  EXPECT_EQ(oracle::minimal_polynomial_degree(companion), 3);
}

TEST(DegreeProbe, ReportsExceededBound) {
  const MatrixQ companion = q_mat({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
  const auto r = algebraic_degree_probe(companion, 2);
  EXPECT_FALSE(r.estimated_degree.has_value());
  EXPECT_EQ(r.vanish_pattern.size(), 2u);
  EXPECT_THROW(algebraic_degree_probe(companion, 8), InvalidInput);
}

TEST(DegreeProbe, MatchesMinimalPolynomialOracle) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + t % 3;
    MatrixQ a = random_rational_matrix(n, rng);
    if (t % 5 == 0) a = MatrixQ::scalar(n, Rational(3));
    EXPECT_EQ(algebraic_degree_probe(a, 4, 4, static_cast<std::uint64_t>(t)).estimated_degree,
              oracle::minimal_polynomial_degree(a))
        << a;
  }
}

TEST(DegreeProbe, DeterministicPerSeed) {
  const QuaternionQ q(Rational(1), Rational(2), Rational(-1), Rational(1, 2));
  const auto a = algebraic_degree_probe(q, 3, 6, 99);
  const auto b = algebraic_degree_probe(q, 3, 6, 99);
  EXPECT_EQ(a.estimated_degree, b.estimated_degree);
  EXPECT_EQ(a.vanish_pattern, b.vanish_pattern);
}
