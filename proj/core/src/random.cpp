#include "pcomm/random.hpp"

#include <cmath>

namespace pcomm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view stream, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(root ^ h) + index);
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int a = num(rng);
  const int b = den(rng);
  Rational r(a, b);
  r.canonicalize();
  return r;
}

QuaternionQ random_rational_quaternion(Rng& rng, int max_num, int max_den) {
  QuaternionQ q;
  q.w = random_rational(rng, max_num, max_den);
  q.x = random_rational(rng, max_num, max_den);
  q.y = random_rational(rng, max_num, max_den);
  q.z = random_rational(rng, max_num, max_den);
  return q;
}

MatrixQ random_rational_matrix(std::size_t n, Rng& rng, int max_num, int max_den) {
  MatrixQ m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, max_num, max_den);
  return m;
}

MatrixHQ random_quaternion_matrix(std::size_t n, Rng& rng, int max_num, int max_den) {
  MatrixHQ m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational_quaternion(rng, max_num, max_den);
  return m;
}

PolynomialQ random_rational_poly(int degree, Rng& rng, int max_num, int max_den) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_rational(rng, max_num, max_den);
  while (sgn(c.back()) == 0) c.back() = random_rational(rng, max_num, max_den);
  return PolynomialQ(std::move(c));
}

PolynomialD random_real_poly(int degree, Rng& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = u(rng);
  while (std::abs(c.back()) < 0.1) c.back() = u(rng);
  return PolynomialD(std::move(c));
}

MatrixC random_gaussian_matrix(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  MatrixC m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = {re, im};
    }
  return m;
}

QuaternionD random_pure_quaternion(Rng& rng, double lo, double hi) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  QuaternionD q;
  do {
    q.x = g(rng);
    q.y = g(rng);
    q.z = g(rng);
  } while (q.imag_norm2() < 1e-6);
  return (std::exp(u(rng)) / norm(q)) * q;
}

}  // namespace pcomm
