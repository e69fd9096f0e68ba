#include "pcomm/quat_solver.hpp"

#include <cmath>
#include <sstream>

#include "pcomm/random.hpp"

namespace pcomm {

QuaternionD complexifying_conjugator(const QuaternionD& alpha) {
  const QuaternionD im = alpha.imag();
  const double r = norm(im);
  if (r == 0.0) return QuaternionD(1.0);

  QuaternionD n = im / r;
  QuaternionD flip(1.0);
  if (n.x < 0.0) {
    // j^{-1} n j has the i-component negated
    flip = QuaternionD::unit_j();
    n = flip.inverse() * n * flip;
  }
  // gamma i gamma^{-1} = n for gamma = 1 - n i when n != -i
  QuaternionD g = QuaternionD(1.0) - n * QuaternionD::unit_i();
  g = g / norm(g);
  QuaternionD gamma = flip * g;

  const QuaternionD canon(alpha.w, r, 0.0, 0.0);
  const QuaternionD check = gamma.inverse() * alpha * gamma - canon;
  if (norm(check) > 1e-12 * (1.0 + norm(alpha)))
    throw NumericalFailure("complexifying_conjugator: verification failed");
  return gamma;
}

QuatSolution solve_polycomm_quat(const PolynomialD& p, const QuaternionD& v_in) {
  if (p.is_constant()) throw InvalidInput("solve_polycomm_quat: polynomial is constant");
  const double vn = norm(v_in);
  if (std::abs(v_in.w) > 1e-12 * (1.0 + vn)) {
    std::ostringstream msg;
    msg << "solve_polycomm_quat: target has nonzero real part " << v_in.w
        << "; polynomial commutators in H are purely imaginary";
    throw InvalidInput(msg.str());
  }
  const QuaternionD v = v_in.imag();
  const OddFactor<double> f = derive_odd_factor(p);

  QuatSolution sol;
  sol.case_tag = f.case_tag;
  if (v.is_zero()) return sol;

  const double target = norm(v);
  sol.t = solve_odd_equation(f, target);
  const QuaternionD w = (sol.t / target) * v;

  if (f.case_tag == OddCase::EvenOnly) {
    // b (s + w) b^{-1} = s - w, a = (s + w) b^{-1}
    sol.b = negating_conjugator(w);
    sol.a = (QuaternionD(f.s) + w) * sol.b.inverse();
  } else {
    // u orthogonal unit imaginary: (u w) u = w, u (u w) = -w
    QuaternionD u = orthogonal_imaginary(v);
    u = u / norm(u);
    sol.b = u;
    sol.a = u * w;
  }
  sol.residual = norm(poly_commutator_quat(p, sol.a, sol.b) - v_in);
  return sol;
}

namespace {

QuaternionD conjugate_by(const QuaternionD& g, const QuaternionD& q) { return g * q * g.inverse(); }

QuatSolution conjugate_solution(const PolynomialD& p, const QuaternionD& g, QuatSolution s,
                                const QuaternionD& target) {
  s.a = conjugate_by(g, s.a);
  s.b = conjugate_by(g, s.b);
  s.residual = norm(poly_commutator_quat(p, s.a, s.b) - target);
  return s;
}

}  // namespace

QuatFactorization factor_two_polycomm_quat(const PolynomialD& p, const QuaternionD& alpha) {
  if (p.is_constant()) throw InvalidInput("factor_two_polycomm_quat: polynomial is constant");
  QuatFactorization out;
  out.gamma = complexifying_conjugator(alpha);
  const double r = norm(alpha.imag());

  // Re(alpha) + r i = j * (-Re(alpha) j + r k)
  const QuaternionD t1 = QuaternionD::unit_j();
  const QuaternionD t2(0.0, 0.0, -alpha.w, r);

  out.factor1 = conjugate_by(out.gamma, t1).imag();
  out.factor2 = conjugate_by(out.gamma, t2).imag();
  out.first = conjugate_solution(p, out.gamma, solve_polycomm_quat(p, t1), out.factor1);
  out.second = conjugate_solution(p, out.gamma, solve_polycomm_quat(p, t2), out.factor2);

  const QuaternionD f1 = poly_commutator_quat(p, out.first.a, out.first.b);
  const QuaternionD f2 = poly_commutator_quat(p, out.second.a, out.second.b);
  out.residual = norm(f1 * f2 - alpha);
  return out;
}

NoncommutingPair find_nonvanishing_pair(const PolynomialQ& p, std::uint64_t seed,
                                        std::size_t max_random_trials) {
  if (p.is_constant()) throw InvalidInput("find_nonvanishing_pair: polynomial is constant");
  const QuaternionQ one(Rational(1));
  const QuaternionQ i = QuaternionQ::unit_i(), j = QuaternionQ::unit_j(), k = QuaternionQ::unit_k();
  const std::pair<QuaternionQ, QuaternionQ> fixed[] = {
      {i, j}, {i, i + j}, {j, k}, {i + j, k}, {i, one + j}, {one + i, j + k}, {i, i + j + k},
  };

  NoncommutingPair out;
  for (const auto& [a, b] : fixed) {
    ++out.trials;
    QuaternionQ val = poly_commutator_quat(p, a, b);
    if (!val.is_zero()) {
      out.alpha = a;
      out.beta = b;
      out.value = std::move(val);
      return out;
    }
  }
  Rng rng(derive_seed(seed, "nonvanishing_pair"));
  for (std::size_t t = 0; t < max_random_trials; ++t) {
    ++out.trials;
    QuaternionQ a = random_rational_quaternion(rng);
    QuaternionQ b = random_rational_quaternion(rng);
    QuaternionQ val = poly_commutator_quat(p, a, b);
    if (!val.is_zero()) {
      out.alpha = std::move(a);
      out.beta = std::move(b);
      out.value = std::move(val);
      return out;
    }
  }
  throw NumericalFailure("find_nonvanishing_pair: search exhausted after " +
                         std::to_string(out.trials) + " trials");
}

}  // namespace pcomm
