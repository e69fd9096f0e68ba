#include "pcomm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "pcomm/random.hpp"

namespace pcomm {

double frobenius_norm(const MatrixC& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

MatrixC adjoint(const MatrixC& a) {
  MatrixC r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

MatrixC to_complex(const MatrixQ& a) {
  MatrixC r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = {a(i, j).get_d(), 0.0};
  return r;
}

std::vector<double> hermitian_eigenvalues(const MatrixC& h_in) {
  const std::size_t n = h_in.size();
  MatrixC h = h_in;
  // symmetrize against rounding in the caller's construction
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = {h(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }

  double total = 0.0;
  for (const Complex& z : h.entries()) total += std::norm(z);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(h(i, j));
    if (off <= 1e-32 * total || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex z = h(p, q);
        const double r = std::abs(z);
        if (r == 0.0) continue;
        // phase q so that h(p,q) becomes real and positive
        const Complex ph = z / r;
        for (std::size_t k = 0; k < n; ++k) {
          h(k, q) *= std::conj(ph);
          h(q, k) *= ph;
        }
        const double a = h(p, p).real(), b = h(q, q).real();
        const double theta = (b - a) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(k, p), hq = h(k, q);
          h(k, p) = c * hp - s * hq;
          h(k, q) = s * hp + c * hq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(p, k), hq = h(q, k);
          h(p, k) = c * hp - s * hq;
          h(q, k) = s * hp + c * hq;
        }
        h(p, q) = h(q, p) = Complex{};
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

namespace {

std::vector<Complex> mat_vec(const MatrixC& a, const std::vector<Complex>& v) {
  const std::size_t n = a.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

}  // namespace

double operator_norm(const MatrixC& a, const OperatorNormOptions& opts) {
  const std::size_t n = a.size();
  if (n == 0 || a.is_zero()) return 0.0;
  const MatrixC m = adjoint(a) * a;

  Rng rng(derive_seed(0, "operator_norm_start"));
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) {
    const double re = g(rng);
    const double im = g(rng);
    z = {re, im};
  }
  double nv = std::sqrt(norm2(v));
  for (auto& z : v) z /= nv;

  double lambda = 0.0;
  int stable = 0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    std::vector<Complex> w = mat_vec(m, v);
    Complex rq{};
    for (std::size_t i = 0; i < n; ++i) rq += std::conj(v[i]) * w[i];
    const double next = rq.real();

    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += std::norm(w[i] - next * v[i]);
    res = std::sqrt(res);

    const double nw = std::sqrt(norm2(w));
    if (nw == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;

    if (res <= 1e-13 * next) return std::sqrt(next);
    stable = std::abs(next - lambda) <= opts.relative_tolerance * next ? stable + 1 : 0;
    lambda = next;
    if (stable >= 5) return std::sqrt(lambda);
  }
  throw NumericalFailure("operator_norm: power iteration did not converge in " +
                         std::to_string(opts.max_iterations) + " iterations");
}

namespace {

double rotated_hermitian_max(const MatrixC& a, const MatrixC& a_star, double theta) {
  const Complex e = std::polar(1.0, theta);
  const std::size_t n = a.size();
  MatrixC h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * a(i, j) + std::conj(e) * a_star(i, j));
  return hermitian_eigenvalues(h).back();
}

}  // namespace

double numerical_radius(const MatrixC& a) {
  if (a.size() == 0) return 0.0;
  const MatrixC a_star = adjoint(a);
  constexpr int kGrid = 256;
  const double step = 2.0 * std::numbers::pi / kGrid;

  int best_k = 0;
  double best = -1.0;
  for (int k = 0; k < kGrid; ++k) {
    const double f = rotated_hermitian_max(a, a_star, k * step);
    if (f > best) {
      best = f;
      best_k = k;
    }
  }

  // golden-section maximization on [theta* - step, theta* + step]
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_k * step - step, hi = best_k * step + step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = rotated_hermitian_max(a, a_star, x1), f2 = rotated_hermitian_max(a, a_star, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rotated_hermitian_max(a, a_star, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rotated_hermitian_max(a, a_star, x1);
    }
  }
  return std::max({best, f1, f2, 0.0});
}

BoundReport make_report(double lhs, double rhs, std::size_t n, int degree, std::uint64_t seed) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.satisfied = lhs <= rhs * (1.0 + 1e-10);
  r.ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
  r.n = n;
  r.degree = degree;
  r.seed = seed;
  return r;
}

BoundReport check_bw(const MatrixC& a, const MatrixC& b) {
  const double c = frobenius_norm(commutator(a, b));
  const double fa = frobenius_norm(a), fb = frobenius_norm(b);
  return make_report(c * c, 2.0 * fa * fa * fb * fb, a.size(), 1);
}

namespace {

void require_nonconstant(const PolynomialD& p) {
  if (p.is_constant()) throw InvalidInput("norm bound needs a nonconstant polynomial");
}

PolynomialC to_complex(const PolynomialD& p) {
  std::vector<Complex> c;
  for (double x : p.coeffs()) c.emplace_back(x, 0.0);
  return PolynomialC(std::move(c));
}

// sum_{k=1}^d |a_k| k base^k-1 extra^k-1 ... generalized by a per-k scale
template <class Scale>
double coefficient_sum(const PolynomialD& p, Scale&& scale) {
  double s = 0.0;
  for (int k = 1; k <= p.degree(); ++k) {
    const double ak = std::abs(p.coeff(static_cast<std::size_t>(k)));
    if (ak == 0.0) continue;
    s += ak * k * scale(k);
  }
  return s;
}

}  // namespace

MatrixC poly_commutator_c(const PolynomialD& p, const MatrixC& a, const MatrixC& b) {
  return poly_commutator(to_complex(p), a, b);
}

BoundReport check_frobenius_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b) {
  require_nonconstant(p);
  const double lhs = frobenius_norm(poly_commutator_c(p, a, b));
  const double fa = frobenius_norm(a), fb = frobenius_norm(b);
  const double sum = coefficient_sum(p, [&](int k) { return std::pow(fa * fb, k - 1); });
  return make_report(lhs, frobenius_norm(commutator(a, b)) * sum, a.size(), p.degree());
}

BoundReport check_numrad_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b) {
  require_nonconstant(p);
  const double lhs = numerical_radius(poly_commutator_c(p, a, b));
  const double ha = numerical_radius(a), hb = numerical_radius(b);
  const double sum = coefficient_sum(
      p, [&](int k) { return std::ldexp(1.0, 2 * k - 1) * std::pow(ha * hb, k - 1); });
  return make_report(lhs, numerical_radius(commutator(a, b)) * sum, a.size(), p.degree());
}

namespace {

constexpr std::size_t kChunk = 4096;

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

Moments sphere_chunk(const MatrixC& a, std::size_t count, std::uint64_t seed, std::uint64_t chunk) {
  const std::size_t n = a.size();
  Rng rng(derive_seed(seed, "spherical_average", chunk));
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  std::vector<Complex> v(n);
  Moments mom;
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& z : v) {
      const double re = g(rng);
      const double im = g(rng);
      z = {re, im};
    }
    const double vv = norm2(v);
    if (vv == 0.0) continue;
    // |A v|^2 for v = g / |g|
    mom.add(static_cast<double>(n) * (norm2(mat_vec(a, v)) / vv));
  }
  return mom;
}

}  // namespace

SphereEstimate spherical_average(const MatrixC& a, std::size_t samples, std::uint64_t seed,
                                 unsigned threads) {
  if (a.size() == 0) throw InvalidInput("spherical_average: empty matrix");
  if (samples == 0) throw InvalidInput("spherical_average: need at least one sample");
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> parts(chunks);
  auto run = [&](std::size_t c) {
    const std::size_t count = std::min(kChunk, samples - c * kChunk);
    parts[c] = sphere_chunk(a, count, seed, c);
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < chunks; c += threads) run(c);
      });
  }

  Moments total;
  for (const auto& m : parts) total.merge(m);

  SphereEstimate est;
  est.samples = total.count;
  est.mean = total.mean;
  const double var = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  est.std_error = std::sqrt(var / static_cast<double>(total.count));
  const double f = frobenius_norm(a);
  est.exact_value = f * f;
  return est;
}

AverageBoundReport check_average_bound(const PolynomialD& p, const MatrixC& a, const MatrixC& b,
                                       std::size_t samples, std::uint64_t seed) {
  require_nonconstant(p);
  AverageBoundReport out;
  const MatrixC c = commutator(a, b);
  out.estimate = spherical_average(c, samples, seed);
  const double na = operator_norm(a), nb = operator_norm(b);
  const double sum = coefficient_sum(p, [&](int k) { return std::pow(na * nb, k - 1); });
  const double lhs_root = frobenius_norm(poly_commutator_c(p, a, b));
  const double sum2 = sum * sum;
  out.report = make_report(lhs_root * lhs_root, out.estimate.mean * sum2, a.size(), p.degree(), seed);
  out.rhs_upper = (out.estimate.mean + 4.0 * out.estimate.std_error) * sum2;
  out.report.satisfied = out.report.lhs <= out.rhs_upper * (1.0 + 1e-10);
  return out;
}

EmpiricalConstant empirical_constant(const PolynomialD& p, std::size_t n, std::size_t trials,
                                     std::uint64_t seed) {
  require_nonconstant(p);
  if (trials == 0) throw InvalidInput("empirical_constant: need at least one trial");
  if (n == 0) throw InvalidInput("empirical_constant: dimension must be positive");
  EmpiricalConstant out;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, "empirical_constant", t));
    const MatrixC a = random_gaussian_matrix(n, rng);
    const MatrixC b = random_gaussian_matrix(n, rng);
    const double pc = frobenius_norm(poly_commutator_c(p, a, b));
    const double c = frobenius_norm(commutator(a, b));
    ConstantTrial row;
    row.trial = t;
    row.ratio_norms = pc / (frobenius_norm(a) * frobenius_norm(b));
    out.max_ratio_norms = std::max(out.max_ratio_norms, row.ratio_norms);
    if (c < 1e-12) {
      row.skipped = true;
      row.ratio_commutator = std::nan("");
      ++out.skipped;
    } else {
      row.ratio_commutator = pc / c;
      out.max_ratio_commutator = std::max(out.max_ratio_commutator, row.ratio_commutator);
    }
    out.trials.push_back(row);
  }
  return out;
}

}  // namespace pcomm
