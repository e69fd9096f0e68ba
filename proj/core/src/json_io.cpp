#include "pcomm/json_io.hpp"

#include <cmath>

namespace pcomm::io {

json encode(const Rational& x) { return x.get_str(); }
json encode(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}
json encode(const Complex& z) { return json::array({encode(z.real()), encode(z.imag())}); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw InvalidInput("expected a rational (string \"p/q\" or number), got " + j.dump());
}

double decode_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InvalidInput("malformed float literal '" + s + "'");
    return v;
  }
  throw InvalidInput("expected a real number, got " + j.dump());
}

Complex decode_complex(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InvalidInput("complex number must be [re, im]");
    return {decode_double(j[0]), decode_double(j[1])};
  }
  return {decode_double(j), 0.0};
}

}  // namespace pcomm::io
