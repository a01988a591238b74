#pragma once

#include <fstream>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>
#include "sustar/backends/function_algebra.hpp"
#include "sustar/backends/matrix_algebra.hpp"
#include "sustar/backends/polynomial_algebra.hpp"
#include "sustar/dominated/tower.hpp"
#include "sustar/suops/real_polynomial.hpp"

// Element files:
//   {"backend":"matrix","dim":n,"data":[[[re,im],...],...]}            row-major
//   {"backend":"function","points":[...],"values":[[re,im],...]}
//   {"backend":"polynomial","vars":N,"terms":[{"exps":[...],"coeff":[re,im]}],"samples":[[...],...]}
// Doubles are written with max_digits10, so files round-trip bit-exactly.

namespace sustar::io {

using Json = nlohmann::ordered_json;

struct MatrixInput {
  Matrix value;
};
struct FunctionInput {
  std::vector<double> points;
  ComplexVector values;
};
struct PolynomialInput {
  std::size_t nvars = 1;
  Polynomial value;
  std::vector<std::vector<double>> samples;
};
using ElementInput = std::variant<MatrixInput, FunctionInput, PolynomialInput>;

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) parse_error(std::string(what) + ": non-finite number");
  return x;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

/// [re, im]; a bare number is accepted as a real scalar.
inline Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "scalar"), 0.0};
  if (!j.is_array() || j.size() != 2) parse_error("complex numbers are written as [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

inline Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    data.push_back(std::move(row));
  }
  return Json{{"backend", "matrix"}, {"dim", m.rows()}, {"data", std::move(data)}};
}

inline Json to_json(const FunctionAlgebra& alg, const ComplexVector& f) {
  Json values = Json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) values.push_back(to_json(f(i)));
  return Json{{"backend", "function"}, {"points", alg.points()}, {"values", std::move(values)}};
}

inline Json polynomial_terms(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  return terms;
}

inline Json to_json(const PolynomialAlgebra& alg, const Polynomial& p) {
  return Json{{"backend", "polynomial"}, {"vars", alg.nvars()}, {"terms", polynomial_terms(p)}, {"samples", alg.samples()}};
}

inline Matrix matrix_from_json(const Json& j) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) parse_error("matrix dim must be a positive integer");
  const auto n = static_cast<Eigen::Index>(dim_j.get<long long>());
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != n) parse_error("matrix data must have dim rows");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) parse_error("matrix rows must have dim entries");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = scalar_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

inline Polynomial polynomial_from_terms(const Json& terms, std::size_t nvars) {
  if (!terms.is_array()) parse_error("polynomial terms must be an array");
  Polynomial p;
  for (const Json& t : terms) {
    const Json& exps = field(t, "exps");
    if (!exps.is_array() || exps.size() != nvars) parse_error("each term needs exps of length vars");
    Exponents e;
    for (const Json& x : exps) {
      if (!x.is_number_integer() || x.get<long long>() < 0) parse_error("exponents must be non-negative integers");
      e.push_back(static_cast<unsigned>(x.get<long long>()));
    }
    const Scalar c = scalar_from_json(field(t, "coeff"));
    if (c != Scalar{}) p.terms[e] += c;
  }
  return p;
}

inline std::size_t nvars_from_json(const Json& j) {
  const Json& v = field(j, "vars");
  if (!v.is_number_integer() || v.get<long long>() < 1) parse_error("vars must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline ElementInput element_from_json(const Json& j) {
  const Json& backend = field(j, "backend");
  if (!backend.is_string()) parse_error("backend must be a string");
  const std::string name = backend.get<std::string>();
  if (name == "matrix") return MatrixInput{matrix_from_json(j)};
  if (name == "function") {
    FunctionInput in;
    const Json& pts = field(j, "points");
    const Json& vals = field(j, "values");
    if (!pts.is_array() || !vals.is_array() || pts.size() != vals.size() || pts.empty())
      parse_error("function element needs equally long, non-empty points and values");
    for (const Json& p : pts) in.points.push_back(number(p, "point"));
    in.values.resize(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) in.values(static_cast<Eigen::Index>(i)) = scalar_from_json(vals[i]);
    return in;
  }
  if (name == "polynomial") {
    PolynomialInput in;
    in.nvars = nvars_from_json(j);
    in.value = polynomial_from_terms(field(j, "terms"), in.nvars);
    const Json& samples = field(j, "samples");
    if (!samples.is_array() || samples.empty()) parse_error("polynomial element needs a non-empty sample list");
    for (const Json& s : samples) {
      if (!s.is_array() || s.size() != in.nvars) parse_error("each sample needs vars coordinates");
      std::vector<double> pt;
      for (const Json& x : s) pt.push_back(number(x, "sample coordinate"));
      in.samples.push_back(std::move(pt));
    }
    return in;
  }
  parse_error("unknown backend \"" + name + "\"");
}

/// Real polynomial from {"vars":N,"terms":[...]}; imaginary coefficients are rejected.
inline RealPolynomial real_polynomial_from_json(const Json& j) {
  const std::size_t nvars = nvars_from_json(j);
  const Polynomial p = polynomial_from_terms(field(j, "terms"), nvars);
  RealPolynomial out{nvars, {}};
  for (const auto& [e, c] : p.terms) {
    if (c.imag() != 0.0) parse_error("calculus polynomials must have real coefficients");
    out.terms[e] = c.real();
  }
  return out;
}

inline Json to_json(const HamiltonianSpec& spec) { return Json{{"eigenvalues", spec.eigenvalues}, {"dims", spec.dims}}; }

inline HamiltonianSpec hamiltonian_from_json(const Json& j) {
  HamiltonianSpec spec;
  const Json& ev = field(j, "eigenvalues");
  const Json& dims = field(j, "dims");
  if (!ev.is_array() || !dims.is_array()) parse_error("eigenvalues and dims must be arrays");
  for (const Json& x : ev) spec.eigenvalues.push_back(number(x, "eigenvalue"));
  for (const Json& d : dims) {
    if (!d.is_number_integer()) parse_error("dims must be integers");
    spec.dims.push_back(static_cast<int>(d.get<long long>()));
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    parse_error(std::string("invalid Hamiltonian spec: ") + e.what());
  }
  return spec;
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

/// Pretty-printed with round-trip precision.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace sustar::io
