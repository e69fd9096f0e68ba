#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "pcomm/matrix.hpp"
#include "pcomm/polynomial.hpp"
#include "pcomm/quaternion.hpp"
#include "pcomm/realize.hpp"

// JSON encodings:
//   rational    "num/den" (or "num" for integers)
//   float       JSON number
//   complex     [re, im]
//   quaternion  [w, x, y, z]
//   polynomial  array of coefficients, constant term first
//   matrix      row-major nested arrays
namespace pcomm::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json encode(const Rational& x);
json encode(double x);
json encode(const Complex& z);

template <class T>
json encode(const Quaternion<T>& q) {
  return json::array({encode(q.w), encode(q.x), encode(q.y), encode(q.z)});
}

template <class C>
json encode(const Polynomial<C>& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(encode(c));
  if (a.empty()) a.push_back(encode(C(0)));
  return a;
}

template <class S>
json encode(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) r.push_back(encode(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

// Scalars accept either strings or JSON numbers.
Rational decode_rational(const json& j);
double decode_double(const json& j);
Complex decode_complex(const json& j);

template <class S>
S decode_scalar(const json& j);
template <>
inline Rational decode_scalar<Rational>(const json& j) {
  return decode_rational(j);
}
template <>
inline double decode_scalar<double>(const json& j) {
  return decode_double(j);
}
template <>
inline Complex decode_scalar<Complex>(const json& j) {
  return decode_complex(j);
}
template <>
inline QuaternionQ decode_scalar<QuaternionQ>(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInput("quaternion must be a JSON array [w, x, y, z]");
  return {decode_rational(j[0]), decode_rational(j[1]), decode_rational(j[2]),
          decode_rational(j[3])};
}
template <>
inline QuaternionD decode_scalar<QuaternionD>(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInput("quaternion must be a JSON array [w, x, y, z]");
  return {decode_double(j[0]), decode_double(j[1]), decode_double(j[2]), decode_double(j[3])};
}

template <class C>
Polynomial<C> decode_polynomial(const json& j) {
  if (!j.is_array() || j.empty())
    throw InvalidInput("polynomial must be a nonempty JSON array of coefficients");
  std::vector<C> c;
  for (const auto& x : j) c.push_back(decode_scalar<C>(x));
  return Polynomial<C>(std::move(c));
}

template <class S>
Matrix<S> decode_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty nested JSON array");
  const std::size_t n = j.size();
  Matrix<S> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InvalidInput("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = decode_scalar<S>(j[i][k]);
  }
  return m;
}

template <class S>
constexpr const char* ring_name();
template <>
constexpr const char* ring_name<Rational>() {
  return "rational";
}
template <>
constexpr const char* ring_name<QuaternionQ>() {
  return "quaternion";
}
template <>
constexpr const char* ring_name<Complex>() {
  return "complex";
}

template <class S>
json encode(const RealizationWitness<S>& w) {
  return json{{"schema", kSchemaVersion},
              {"ring", ring_name<S>()},
              {"p", encode(w.p)},
              {"A", encode(w.target)},
              {"A1", encode(w.a1)},
              {"B1", encode(w.b1)},
              {"G", encode(w.g)},
              {"G1", encode(w.g1)},
              {"G2", encode(w.g2)},
              {"D", encode(w.d)},
              {"L1", encode(w.l1)},
              {"U1", encode(w.u1)},
              {"verified", verify_witness(w)}};
}

// With `verify`, p(A1 B1) - p(B1 A1) = A is re-checked and a mismatch throws
// VerificationFailure.
template <class S>
RealizationWitness<S> decode_witness(const json& j, bool verify = true) {
  if (!j.is_object()) throw InvalidInput("witness must be a JSON object");
  if (j.value("ring", std::string()) != ring_name<S>())
    throw InvalidInput(std::string("witness ring must be '") + ring_name<S>() + "'");
  auto field = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw InvalidInput(std::string("witness is missing field '") + key + "'");
    return j.at(key);
  };
  RealizationWitness<S> w;
  w.p = decode_polynomial<Rational>(field("p"));
  w.target = decode_matrix<S>(field("A"));
  w.a1 = decode_matrix<S>(field("A1"));
  w.b1 = decode_matrix<S>(field("B1"));
  w.g = decode_matrix<S>(field("G"));
  w.g1 = decode_matrix<S>(field("G1"));
  w.g2 = decode_matrix<S>(field("G2"));
  w.d = decode_matrix<S>(field("D"));
  if (j.contains("L1")) w.l1 = decode_matrix<S>(j.at("L1"));
  if (j.contains("U1")) w.u1 = decode_matrix<S>(j.at("U1"));
  if (verify && !verify_witness(w))
    throw VerificationFailure("witness does not satisfy p(A1 B1) - p(B1 A1) = A");
  return w;
}

}  // namespace pcomm::io
