#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "pcomm/matrix.hpp"
#include "pcomm/polynomial.hpp"
#include "pcomm/quaternion.hpp"

namespace pcomm {

using Rng = std::mt19937_64;

// Seed of the named substream `stream` (and chunk `index`) under `root`.
// Stable across platforms: FNV-1a over the name, mixed with splitmix64.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream, std::uint64_t index = 0);

// Small random rationals num/den with |num| <= max_num, 1 <= den <= max_den.
Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4);
QuaternionQ random_rational_quaternion(Rng& rng, int max_num = 5, int max_den = 4);
MatrixQ random_rational_matrix(std::size_t n, Rng& rng, int max_num = 5, int max_den = 4);
MatrixHQ random_quaternion_matrix(std::size_t n, Rng& rng, int max_num = 3, int max_den = 2);

// Exactly `degree` with nonzero leading coefficient.
PolynomialQ random_rational_poly(int degree, Rng& rng, int max_num = 4, int max_den = 3);
PolynomialD random_real_poly(int degree, Rng& rng);

// Entries i.i.d. standard complex Gaussian (real and imaginary parts N(0, 1/2)).
MatrixC random_gaussian_matrix(std::size_t n, Rng& rng);

// Purely imaginary float quaternion with norm log-uniform in [lo, hi].
QuaternionD random_pure_quaternion(Rng& rng, double lo, double hi);

}  // namespace pcomm
