#include "pcomm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "pcomm/json_io.hpp"
#include "pcomm/norms.hpp"
#include "pcomm/quat_solver.hpp"
#include "pcomm/random.hpp"
#include "pcomm/realize.hpp"

namespace pcomm::cli {

namespace {

using io::json;

struct Config {
  std::string command;
  std::string poly;
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> n;
  std::optional<int> max_degree;
  std::optional<double> tolerance;
  std::string ring = "rational";
  std::string format = "json";
};

json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    text = text_or_path;
  } else {
    std::ifstream f(text_or_path);
    if (!f) throw InvalidInput("cannot read input file '" + text_or_path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

json input_json(const Config& c) {
  if (c.input.empty()) throw InvalidInput(c.command + " needs --input");
  return load_json(c.input);
}

// `key` from an object input, or the input itself when it is not an object.
json field_or_self(const json& j, const char* key) {
  if (!j.is_object()) return j;
  if (!j.contains(key)) throw InvalidInput(std::string("input is missing field '") + key + "'");
  return j.at(key);
}

PolynomialQ polynomial(const Config& c, const json* input = nullptr) {
  json j;
  if (!c.poly.empty()) {
    j = load_json(c.poly);
  } else if (input && input->is_object() && input->contains("p")) {
    j = input->at("p");
  } else {
    throw InvalidInput(c.command + " needs --poly");
  }
  PolynomialQ p = io::decode_polynomial<Rational>(j);
  if (p.is_constant()) throw InvalidInput("polynomial must be nonconstant");
  return p;
}

json header(const Config& c) { return json{{"schema", io::kSchemaVersion}, {"command", c.command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_json_format(const Config& c) {
  if (c.format != "json") throw InvalidInput(c.command + " only supports --format json");
}

double tolerance_or(const Config& c, double fallback) {
  if (!c.tolerance) return fallback;
  if (!(*c.tolerance > 0.0)) throw InvalidInput("--tolerance must be positive");
  return *c.tolerance;
}

json encode_solution(const QuatSolution& s) {
  return json{{"a", io::encode(s.a)},
              {"b", io::encode(s.b)},
              {"t", io::encode(s.t)},
              {"case", s.case_tag == OddCase::EvenOnly ? "even_only" : "has_odd_term"},
              {"residual", io::encode(s.residual)}};
}

json encode_report(const BoundReport& r, const char* bound) {
  return json{{"bound", bound},           {"seed", r.seed},
              {"n", r.n},                 {"degree", r.degree},
              {"lhs", io::encode(r.lhs)}, {"rhs", io::encode(r.rhs)},
              {"ratio", io::encode(r.ratio)}, {"satisfied", r.satisfied}};
}

std::string csv_number(double x) {
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

int cmd_solve_quat(const Config& c, std::ostream& out) {
  require_json_format(c);
  const json in = input_json(c);
  const PolynomialQ p = polynomial(c, &in);
  const QuaternionD v = io::decode_scalar<QuaternionD>(field_or_self(in, "v"));
  const QuatSolution s = solve_polycomm_quat(to_float(p), v);
  const bool ok = s.residual <= tolerance_or(c, 1e-8) * (1.0 + norm(v));
  json j = header(c);
  j["p"] = io::encode(p);
  j["v"] = io::encode(v);
  j.update(encode_solution(s));
  j["verified"] = ok;
  emit(out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_factor_quat(const Config& c, std::ostream& out) {
  require_json_format(c);
  const json in = input_json(c);
  const PolynomialQ p = polynomial(c, &in);
  const QuaternionD alpha = io::decode_scalar<QuaternionD>(field_or_self(in, "alpha"));
  const QuatFactorization f = factor_two_polycomm_quat(to_float(p), alpha);
  const double tol = tolerance_or(c, 1e-8);
  const bool ok = f.residual <= tol * (1.0 + norm(alpha)) && std::abs(f.factor1.w) <= 1e-10 &&
                  std::abs(f.factor2.w) <= 1e-10;
  json j = header(c);
  j["p"] = io::encode(p);
  j["alpha"] = io::encode(alpha);
  j["factor1"] = io::encode(f.factor1);
  j["factor2"] = io::encode(f.factor2);
  j["first"] = encode_solution(f.first);
  j["second"] = encode_solution(f.second);
  j["gamma"] = io::encode(f.gamma);
  j["residual"] = io::encode(f.residual);
  j["verified"] = ok;
  emit(out, j);
  return ok ? kOk : kVerificationFailed;
}

template <class S>
int emit_witness(const Config& c, const RealizationWitness<S>& w, std::ostream& out) {
  json j = header(c);
  j.update(io::encode(w));
  emit(out, j);
  return j.at("verified").get<bool>() ? kOk : kVerificationFailed;
}

int cmd_realize_matrix(const Config& c, std::ostream& out) {
  require_json_format(c);
  const json in = input_json(c);
  const PolynomialQ p = polynomial(c, &in);
  const json a_json = field_or_self(in, "A");
  const bool has_g = in.is_object() && in.contains("G");
  if (c.ring == "rational") {
    std::optional<MatrixQ> g;
    if (has_g) g = io::decode_matrix<Rational>(in.at("G"));
    return emit_witness(c, realize_zero_diagonal(p, io::decode_matrix<Rational>(a_json), g), out);
  }
  if (c.ring == "quaternion") {
    std::optional<MatrixHQ> g;
    if (has_g) g = io::decode_matrix<QuaternionQ>(in.at("G"));
    return emit_witness(c, realize_zero_diagonal(p, io::decode_matrix<QuaternionQ>(a_json), g),
                        out);
  }
  throw InvalidInput("realize-matrix supports --ring rational or quaternion");
}

int cmd_realize_traceless(const Config& c, std::ostream& out) {
  require_json_format(c);
  if (c.ring != "rational") throw InvalidInput("realize-traceless supports --ring rational only");
  const json in = input_json(c);
  const PolynomialQ p = polynomial(c, &in);
  return emit_witness(c, realize_traceless(p, io::decode_matrix<Rational>(field_or_self(in, "A"))),
                      out);
}

int cmd_trace_witness(const Config& c, std::ostream& out) {
  require_json_format(c);
  const PolynomialQ p = polynomial(c);
  const std::size_t n = c.n.value_or(2);
  const TraceWitness w = nonzero_trace_witness(p, n, c.seed);
  const QuaternionQ recomputed = trace(poly_commutator(p, w.a, w.b));
  const bool ok = !recomputed.is_zero() && recomputed == w.trace;
  json j = header(c);
  j["p"] = io::encode(p);
  j["n"] = n;
  j["seed"] = c.seed;
  j["alpha"] = io::encode(w.alpha);
  j["beta"] = io::encode(w.beta);
  j["a"] = io::encode(w.a);
  j["b"] = io::encode(w.b);
  j["trace"] = io::encode(w.trace);
  j["random_trials"] = w.trials;
  j["verified"] = ok;
  emit(out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_probe_degree(const Config& c, std::ostream& out) {
  require_json_format(c);
  const json in = field_or_self(input_json(c), "a");
  const int m_max = c.max_degree.value_or(4);
  const std::size_t trials = c.trials.value_or(8);
  const bool is_matrix = in.is_array() && !in.empty() && in[0].is_array() &&
                         (c.ring == "rational" || (!in[0].empty() && in[0][0].is_array()));
  DegreeProbeResult r;
  std::string kind;
  if (c.ring == "rational") {
    if (is_matrix) {
      r = algebraic_degree_probe(io::decode_matrix<Rational>(in), m_max, trials, c.seed);
      kind = "rational_matrix";
    } else {
      r = algebraic_degree_probe(io::decode_rational(in), m_max, trials, c.seed);
      kind = "rational";
    }
  } else if (c.ring == "quaternion") {
    if (is_matrix) {
      r = algebraic_degree_probe(io::decode_matrix<QuaternionQ>(in), m_max, trials, c.seed);
      kind = "quaternion_matrix";
    } else {
      r = algebraic_degree_probe(io::decode_scalar<QuaternionQ>(in), m_max, trials, c.seed);
      kind = "quaternion";
    }
  } else {
    throw InvalidInput("probe-degree supports --ring rational or quaternion");
  }
  json j = header(c);
  j["element"] = kind;
  j["seed"] = c.seed;
  j["max_degree"] = m_max;
  j["trials_per_degree"] = r.trials_per_degree;
  j["estimated_degree"] = r.estimated_degree ? json(*r.estimated_degree) : json(nullptr);
  j["vanish_pattern"] = r.vanish_pattern;
  emit(out, j);
  return kOk;
}

int cmd_verify_bounds(const Config& c, std::ostream& out) {
  const std::size_t n = c.n.value_or(4);
  const std::size_t trials = c.trials.value_or(100);
  const int max_degree = c.max_degree.value_or(6);
  const std::size_t samples = c.samples.value_or(4096);
  if (n == 0) throw InvalidInput("--n must be positive");
  if (max_degree < 1) throw InvalidInput("--max-degree must be at least 1");
  std::optional<PolynomialD> fixed;
  if (!c.poly.empty()) fixed = to_float(polynomial(c));

  json rows = json::array();
  std::vector<std::string> csv;
  std::size_t violations = 0;
  auto record = [&](BoundReport r, const char* bound, std::uint64_t seed) {
    r.seed = seed;
    if (!r.satisfied) ++violations;
    rows.push_back(encode_report(r, bound));
    csv.push_back(std::string(bound) + ',' + std::to_string(seed) + ',' + std::to_string(r.n) +
                  ',' + std::to_string(r.degree) + ',' + csv_number(r.lhs) + ',' +
                  csv_number(r.rhs) + ',' + csv_number(r.ratio) + ',' +
                  (r.satisfied ? "true" : "false"));
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(c.seed, "verify_bounds", t);
    Rng rng(s);
    PolynomialD p;
    if (fixed) {
      p = *fixed;
    } else {
      const int deg = std::uniform_int_distribution<int>(1, max_degree)(rng);
      p = random_real_poly(deg, rng);
    }
    const MatrixC a = random_gaussian_matrix(n, rng);
    const MatrixC b = random_gaussian_matrix(n, rng);
    record(check_bw(a, b), "bottcher_wenzel", s);
    record(check_frobenius_bound(p, a, b), "frobenius", s);
    record(check_numrad_bound(p, a, b), "numerical_radius", s);
    if (samples > 0) record(check_average_bound(p, a, b, samples, s).report, "average", s);
  }

  if (c.format == "csv") {
    out << "bound,seed,n,degree,lhs,rhs,ratio,satisfied\n";
    for (const auto& line : csv) out << line << '\n';
  } else {
    json j = header(c);
    j["seed"] = c.seed;
    j["n"] = n;
    j["trials"] = trials;
    j["samples"] = samples;
    j["rows"] = std::move(rows);
    j["violations"] = violations;
    j["verified"] = violations == 0;
    emit(out, j);
  }
  return violations == 0 ? kOk : kVerificationFailed;
}

int cmd_sphere_avg(const Config& c, std::ostream& out) {
  require_json_format(c);
  const MatrixC a = io::decode_matrix<Complex>(field_or_self(input_json(c), "A"));
  const std::size_t samples = c.samples.value_or(100000);
  if (samples < 1000) throw InvalidInput("--samples must be at least 1000");
  const SphereEstimate e = spherical_average(a, samples, c.seed);
  const double deviation = std::abs(e.mean - e.exact_value);
  const bool ok = deviation <= 4.0 * e.std_error;
  json j = header(c);
  j["seed"] = c.seed;
  j["samples"] = e.samples;
  j["mean"] = io::encode(e.mean);
  j["std_error"] = io::encode(e.std_error);
  j["exact_value"] = io::encode(e.exact_value);
  j["deviation"] = io::encode(deviation);
  j["verified"] = ok;
  emit(out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_sweep_constants(const Config& c, std::ostream& out) {
  const PolynomialQ p = polynomial(c);
  const std::size_t n = c.n.value_or(2);
  const std::size_t trials = c.trials.value_or(1000);
  if (n == 0 || trials == 0) throw InvalidInput("--n and --trials must be positive");
  const EmpiricalConstant e = empirical_constant(to_float(p), n, trials, c.seed);
  if (c.format == "csv") {
    out << "trial,seed,n,degree,ratio_norms,ratio_commutator,skipped\n";
    for (const ConstantTrial& t : e.trials)
      out << t.trial << ',' << c.seed << ',' << n << ',' << p.degree() << ','
          << csv_number(t.ratio_norms) << ',' << (t.skipped ? "" : csv_number(t.ratio_commutator))
          << ',' << (t.skipped ? "true" : "false") << '\n';
    return kOk;
  }
  json j = header(c);
  j["p"] = io::encode(p);
  j["seed"] = c.seed;
  j["n"] = n;
  j["trials"] = trials;
  j["max_ratio_norms"] = io::encode(e.max_ratio_norms);
  j["max_ratio_commutator"] = io::encode(e.max_ratio_commutator);
  j["skipped"] = e.skipped;
  emit(out, j);
  return kOk;
}

template <class S>
int telescope_report(const Config& c, const PolynomialQ& p, const Matrix<S>& a,
                     const Matrix<S>& b, std::ostream& out) {
  if (a.size() != b.size()) throw InvalidInput("A and B must have the same size");
  bool equal = false;
  double deviation = 0.0;
  if constexpr (ScalarTraits<S>::exact) {
    const auto rep = telescoping_expand(p, a, b);
    equal = rep.equal;
    deviation = rep.max_entry_deviation;
  } else {
    const auto rep = telescoping_expand(to_float(p), a, b, tolerance_or(c, 1e-9));
    equal = rep.equal;
    deviation = rep.max_entry_deviation;
  }
  json j = header(c);
  j["ring"] = c.ring;
  j["p"] = io::encode(p);
  j["n"] = a.size();
  j["max_entry_deviation"] = io::encode(deviation);
  j["equal"] = equal;
  j["verified"] = equal;
  emit(out, j);
  return equal ? kOk : kVerificationFailed;
}

int cmd_verify_telescope(const Config& c, std::ostream& out) {
  require_json_format(c);
  std::optional<json> in;
  if (!c.input.empty()) in = load_json(c.input);
  const PolynomialQ p = polynomial(c, in ? &*in : nullptr);
  auto pair = [&]<class S>(auto&& random) -> std::pair<Matrix<S>, Matrix<S>> {
    if (in) {
      if (!in->is_object()) throw InvalidInput("verify-telescope input must be {\"A\": ..., \"B\": ...}");
      return {io::decode_matrix<S>(field_or_self(*in, "A")),
              io::decode_matrix<S>(field_or_self(*in, "B"))};
    }
    const std::size_t n = c.n.value_or(3);
    if (n == 0) throw InvalidInput("--n must be positive");
    Rng rng(derive_seed(c.seed, "verify_telescope"));
    Matrix<S> a = random(n, rng);
    Matrix<S> b = random(n, rng);
    return {std::move(a), std::move(b)};
  };
  if (c.ring == "rational") {
    auto [a, b] = pair.operator()<Rational>(
        [](std::size_t n, Rng& rng) { return random_rational_matrix(n, rng); });
    return telescope_report(c, p, a, b, out);
  }
  if (c.ring == "quaternion") {
    auto [a, b] = pair.operator()<QuaternionQ>(
        [](std::size_t n, Rng& rng) { return random_quaternion_matrix(n, rng); });
    return telescope_report(c, p, a, b, out);
  }
  auto [a, b] = pair.operator()<Complex>(
      [](std::size_t n, Rng& rng) { return random_gaussian_matrix(n, rng); });
  return telescope_report(c, p, a, b, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial commutators: constructive solvers and bound checks", "pcomm"};
  app.require_subcommand(1);
  app.fallthrough();

  Config c;
  app.add_option("--poly", c.poly, "polynomial coefficients as a JSON array, constant term first");
  app.add_option("--input", c.input, "input file path or inline JSON");
  app.add_option("--seed", c.seed, "root seed for all randomness");
  app.add_option("--trials", c.trials, "number of random trials");
  app.add_option("--samples", c.samples, "Monte-Carlo sample count");
  app.add_option("--n", c.n, "matrix dimension")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", c.max_degree, "largest polynomial or probe degree");
  app.add_option("--ring", c.ring, "scalar ring")
      ->check(CLI::IsMember({"rational", "complex", "quaternion"}));
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", c.tolerance, "float comparison tolerance");

  using Handler = int (*)(const Config&, std::ostream&);
  const std::vector<std::pair<std::string, Handler>> commands{
      {"solve-quat", cmd_solve_quat},
      {"factor-quat", cmd_factor_quat},
      {"realize-matrix", cmd_realize_matrix},
      {"realize-traceless", cmd_realize_traceless},
      {"trace-witness", cmd_trace_witness},
      {"probe-degree", cmd_probe_degree},
      {"verify-bounds", cmd_verify_bounds},
      {"sphere-avg", cmd_sphere_avg},
      {"sweep-constants", cmd_sweep_constants},
      {"verify-telescope", cmd_verify_telescope},
  };
  const std::vector<std::pair<std::string, std::string>> summaries{
      {"solve-quat", "find quaternions a, b with p(ab) - p(ba) = v"},
      {"factor-quat", "write a quaternion as a product of two polynomial commutators"},
      {"realize-matrix", "realize a zero-diagonal matrix as p(A1 B1) - p(B1 A1)"},
      {"realize-traceless", "realize a traceless rational matrix"},
      {"trace-witness", "quaternion matrices whose polynomial commutator has nonzero trace"},
      {"probe-degree", "probabilistic algebraic degree over the center"},
      {"verify-bounds", "random sweep of the norm inequalities"},
      {"sphere-avg", "Monte-Carlo average of |Av|^2 over the unit sphere"},
      {"sweep-constants", "observed norm ratios for a fixed polynomial"},
      {"verify-telescope", "check the telescoping expansion of p(AB) - p(BA)"},
  };
  for (const auto& [name, help] : summaries) app.add_subcommand(name, help);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  c.command = app.get_subcommands().front()->get_name();
  const auto it = std::find_if(commands.begin(), commands.end(),
                               [&](const auto& entry) { return entry.first == c.command; });
  try {
    return it->second(c, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace pcomm::cli
