#pragma once

#include <cstdint>
#include <vector>

#include "pcomm/matrix.hpp"
#include "pcomm/polynomial.hpp"

namespace pcomm {

using PolynomialC = Polynomial<Complex>;

double frobenius_norm(const MatrixC& a);

// p(AB) - p(BA) for real coefficients over complex matrices.
MatrixC poly_commutator_c(const PolynomialD& p, const MatrixC& a, const MatrixC& b);

// Conjugate transpose.
MatrixC adjoint(const MatrixC& a);

// Eigenvalues (ascending) of a Hermitian matrix, via cyclic Jacobi on the
// real symmetric embedding [[Re H, -Im H], [Im H, Re H]].
std::vector<double> hermitian_eigenvalues(const MatrixC& h);

// Largest singular value by power iteration on A*A.
struct OperatorNormOptions {
  std::size_t max_iterations = 200000;
  double relative_tolerance = 1e-15;
};
double operator_norm(const MatrixC& a, const OperatorNormOptions& opts = {});

// h(A) = max_theta lambda_max((e^{i theta} A + (e^{i theta} A)^*) / 2): a
// 256-point theta grid followed by golden-section refinement around the best
// grid point.
double numerical_radius(const MatrixC& a);

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double ratio = 0.0;  // lhs / rhs, 0 when rhs = 0
  std::size_t n = 0;
  int degree = 0;
  std::uint64_t seed = 0;
};

// lhs <= rhs (1 + 1e-10)
BoundReport make_report(double lhs, double rhs, std::size_t n, int degree, std::uint64_t seed = 0);

// |[A,B]|_F^2 <= 2 |A|_F^2 |B|_F^2
BoundReport check_bw(const MatrixC& a, const MatrixC& b);

// |p[A,B]|_F <= |[A,B]|_F sum_k |a_k| k |A|_F^{k-1} |B|_F^{k-1}
BoundReport check_frobenius_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b);

// h(p[A,B]) <= h([A,B]) sum_k |a_k| k 2^{2k-1} h(A)^{k-1} h(B)^{k-1}
BoundReport check_numrad_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b);

struct SphereEstimate {
  std::size_t samples = 0;
  double mean = 0.0;  // n * average of |Av|^2
  double std_error = 0.0;
  double exact_value = 0.0;  // |A|_F^2
};

// Monte-Carlo estimate of n * E|Av|^2 over the Haar-uniform unit sphere of
// C^n.  v = g/|g| for standard complex Gaussian g; samples are drawn in
// fixed-size chunks with independent substreams, so `threads` does not
// change the result.
SphereEstimate spherical_average(const MatrixC& a, std::size_t samples, std::uint64_t seed,
                                 unsigned threads = 1);

// |p[A,B]|_F^2 <= n (integral of |[A,B]v|^2) (sum_k |a_k| k |A|_2^{k-1} |B|_2^{k-1})^2,
// with the integral replaced by its Monte-Carlo estimate.  rhs reports the
// point estimate; satisfied compares lhs with the upper 4-sigma band.
struct AverageBoundReport {
  BoundReport report;
  SphereEstimate estimate;
  double rhs_upper = 0.0;
};
AverageBoundReport check_average_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b,
                                       std::size_t samples, std::uint64_t seed);

struct ConstantTrial {
  std::uint64_t trial = 0;
  double ratio_norms = 0.0;       // |p[A,B]|_F / (|A|_F |B|_F)
  double ratio_commutator = 0.0;  // |p[A,B]|_F / |[A,B]|_F, NaN when skipped
  bool skipped = false;           // |[A,B]|_F < 1e-12
};

struct EmpiricalConstant {
  double max_ratio_norms = 0.0;
  double max_ratio_commutator = 0.0;
  std::size_t skipped = 0;
  std::vector<ConstantTrial> trials;
};

// Observed maxima of the two ratios over Gaussian pairs (A, B) of size n.
EmpiricalConstant empirical_constant(const PolynomialD& p, std::size_t n, std::size_t trials,
                                     std::uint64_t seed);

MatrixC to_complex(const MatrixQ& a);

}  // namespace pcomm
