#include "pcomm/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace pcomm {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty rational literal");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // exact decimal: [-]int.frac
    std::string sign, int_part = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) {
      if (int_part[0] == '-') sign = "-";
      int_part.erase(0, 1);
    }
    auto all_digits = [](const std::string& x) {
      for (char c : x)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if ((int_part.empty() && frac.empty()) || !all_digits(int_part) || !all_digits(frac))
      throw InvalidInput("malformed rational literal '" + text + "'");
    std::string digits = int_part + frac;
    if (digits.empty()) digits = "0";
    mpz_class num(sign + digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational r;
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid_int = [](const std::string& x, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !x.empty() && (x[0] == '-' || x[0] == '+')) i = 1;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InvalidInput("malformed rational literal '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InvalidInput("rational literal with zero denominator '" + text + "'");
  r = Rational(n, d);
  r.canonicalize();
  return r;
}

PolynomialD to_float(const PolynomialQ& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.get_d());
  return PolynomialD(std::move(c));
}

OddFactor<double> to_float(const OddFactor<Rational>& f) {
  return {f.case_tag, to_float(f.h), f.s.get_d()};
}

double odd_equation_lhs(const OddFactor<double>& f, double t) { return 2.0 * t * f.h(t * t); }

namespace {

double odd_equation_derivative(const OddFactor<double>& f, double t) {
  // d/dt [2 t h(t^2)] = 2 h(t^2) + 4 t^2 h'(t^2)
  const auto& c = f.h.coeffs();
  const double u = t * t;
  double hp = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) hp = hp * u + static_cast<double>(k) * c[k];
  return 2.0 * f.h(u) + 4.0 * u * hp;
}

}  // namespace

double solve_odd_equation(const OddFactor<double>& f, double target) {
  if (f.h.is_zero()) throw InvalidInput("solve_odd_equation: h is the zero polynomial");
  if (!(target >= 0.0) || !std::isfinite(target))
    throw InvalidInput("solve_odd_equation: target must be a finite nonnegative real");
  if (target == 0.0) return 0.0;

  auto q = [&](double t) { return odd_equation_lhs(f, t) - target; };

  // q(0) = -target < 0; look for the first scan point where q >= 0.
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (double sign : {1.0, -1.0}) {
    double prev = 0.0;
    for (int k = -40; k <= 40 && !found; ++k) {
      const double t = sign * std::ldexp(1.0, k);
      if (q(t) >= 0.0) {
        lo = prev;
        hi = t;
        found = true;
      }
      prev = t;
    }
    if (found) break;
  }
  if (!found) {
    std::ostringstream msg;
    msg << "solve_odd_equation: no sign change of 2t h(t^2) - " << target
        << " on the scan t = +-2^k, k in [-40, 40] (interval [-2^40, 2^40])";
    throw NumericalFailure(msg.str());
  }

  // invariant: q(lo) < 0 <= q(hi)
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (std::abs(hi - lo) <= 1e-15 * std::max(1.0, std::abs(mid))) break;
    if (q(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  double t = std::abs(q(lo)) < std::abs(q(hi)) ? lo : hi;
  if (t == 0.0) t = hi;

  const double d = odd_equation_derivative(f, t);
  if (d != 0.0 && std::isfinite(d)) {
    const double polished = t - q(t) / d;
    if (std::isfinite(polished) && std::abs(q(polished)) < std::abs(q(t))) t = polished;
  }
  return t;
}

}  // namespace pcomm
