#include "maglap/serialization.hpp"

#include <json.hpp>

#include <cctype>

namespace maglap {

namespace {

using ordered_json = nlohmann::ordered_json;

// Canonical output never distinguishes -0.0 from 0.0.
double scrub_zero(double v) { return v == 0.0 ? 0.0 : v; }

ordered_json complex_json(Cplx v) {
  return ordered_json::array({scrub_zero(v.real()), scrub_zero(v.imag())});
}

ordered_json vector_json(const Eigen::VectorXcd& v) {
  ordered_json a = ordered_json::array();
  for (int j = 0; j < v.size(); ++j) a.push_back(complex_json(v[j]));
  return a;
}

ordered_json exponent_json(const Exponents& e, std::size_t from,
                           std::size_t count) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < count; ++i) a.push_back(e[from + i]);
  return a;
}

ordered_json envelope_json(const Envelope& env) {
  ordered_json j;
  j["alpha"] = complex_json(env.alpha);
  j["beta"] = vector_json(env.beta);
  j["gamma"] = vector_json(env.gamma);
  j["delta"] = complex_json(env.delta);
  return j;
}

ordered_json parse_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Cplx read_complex(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex value must be a [re, im] pair");
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

Eigen::VectorXcd read_vector(const ordered_json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("complex vector has wrong length");
  Eigen::VectorXcd v(n);
  for (int k = 0; k < n; ++k) v[k] = read_complex(j[k]);
  return v;
}

void read_exponents(const ordered_json& j, Exponents& e, std::size_t from,
                    std::size_t count) {
  if (!j.is_array() || j.size() != count)
    throw ParseError("exponent array has wrong length");
  for (std::size_t i = 0; i < count; ++i) {
    if (!j[i].is_number_unsigned())
      throw ParseError("exponents must be non-negative integers");
    e[from + i] = j[i].get<std::uint32_t>();
  }
}

int read_dimension(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing dimension field");
  int n = j["n"].get<int>();
  if (n < 1) throw ParseError("dimension must be >= 1");
  return n;
}

Envelope read_envelope(const ordered_json& j, int n) {
  if (!j.is_object()) throw ParseError("envelope must be an object");
  for (const char* key : {"alpha", "beta", "gamma", "delta"})
    if (!j.contains(key)) throw ParseError("envelope field missing");
  Envelope env = Envelope::zero(n);
  env.alpha = read_complex(j["alpha"]);
  env.beta = read_vector(j["beta"], n);
  env.gamma = read_vector(j["gamma"], n);
  env.delta = read_complex(j["delta"]);
  return env;
}

}  // namespace

std::string to_json(const ExpPoly& f) {
  const std::size_t n = f.n();
  ordered_json j;
  j["n"] = n;
  j["envelope"] = envelope_json(f.envelope());
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : f.poly().terms()) {
    ordered_json t;
    t["a"] = exponent_json(e, 0, n);
    t["b"] = exponent_json(e, n, n);
    t["c"] = complex_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string to_json(const DiffOp& op) {
  if (op.nvars() % 2 != 0)
    throw InvalidParameter("to_json: operator is not over (z, zbar) pairs");
  const std::size_t n = op.nvars() / 2;
  ordered_json j;
  j["n"] = n;
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : op.terms()) {
    ordered_json t;
    t["a"] = exponent_json(e, 0, n);
    t["b"] = exponent_json(e, n, n);
    t["dz"] = exponent_json(e, 2 * n, n);
    t["dzbar"] = exponent_json(e, 3 * n, n);
    t["c"] = complex_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

ExpPoly expoly_from_json(const std::string& text) {
  ordered_json j = parse_text(text);
  const int n = read_dimension(j);
  if (!j.contains("envelope") || !j.contains("terms"))
    throw ParseError("missing envelope or terms");
  Envelope env = read_envelope(j["envelope"], n);
  if (!j["terms"].is_array()) throw ParseError("terms must be an array");
  Polynomial p(2 * n);
  for (const ordered_json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b") ||
        !t.contains("c"))
      throw ParseError("term fields missing");
    Exponents e(2 * n, 0);
    read_exponents(t["a"], e, 0, n);
    read_exponents(t["b"], e, n, n);
    p.add_term(e, read_complex(t["c"]));
  }
  p.prune();
  return ExpPoly(std::move(p), std::move(env));
}

DiffOp diffop_from_json(const std::string& text) {
  ordered_json j = parse_text(text);
  const int n = read_dimension(j);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("missing terms array");
  DiffOp op(2 * n);
  for (const ordered_json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b") ||
        !t.contains("dz") || !t.contains("dzbar") || !t.contains("c"))
      throw ParseError("term fields missing");
    Exponents e(4 * n, 0);
    read_exponents(t["a"], e, 0, n);
    read_exponents(t["b"], e, n, n);
    read_exponents(t["dz"], e, 2 * n, n);
    read_exponents(t["dzbar"], e, 3 * n, n);
    op.add_key(e, read_complex(t["c"]));
  }
  op.prune();
  return op;
}

Motion motion_from_json(const std::string& text) {
  ordered_json j = parse_text(text);
  if (!j.is_object() || !j.contains("A") || !j.contains("b"))
    throw ParseError("motion needs A and b fields");
  const ordered_json& rows = j["A"];
  if (!rows.is_array() || rows.empty()) throw ParseError("A must be a matrix");
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ParseError("A must be square");
    for (int k = 0; k < n; ++k) a(i, k) = read_complex(rows[i][k]);
  }
  return make_motion(std::move(a), read_vector(j["b"], n));
}

Cplx parse_complex(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty complex literal");

  auto to_double = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("bad numeric literal: " + part);
    }
    if (used != part.size()) throw ParseError("bad numeric literal: " + part);
    return v;
  };

  if (s.back() != 'i' && s.back() != 'I') return Cplx(to_double(s), 0.0);

  s.pop_back();
  // Split an explicit real part from the imaginary coefficient at the last
  // sign that is not an exponent sign.
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E')
      return Cplx(to_double(s.substr(0, p)), to_double(s.substr(p)));
  }
  return Cplx(0.0, to_double(s));
}

Eigen::VectorXcd parse_complex_vector(const std::string& text, int n) {
  std::vector<Cplx> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (n >= 0 && static_cast<int>(parts.size()) != n)
    throw ParseError("expected a vector of length " + std::to_string(n));
  Eigen::VectorXcd v(static_cast<int>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k)
    v[static_cast<int>(k)] = parts[k];
  return v;
}

std::string format_number(double v) { return ordered_json(scrub_zero(v)).dump(); }

}  // namespace maglap
