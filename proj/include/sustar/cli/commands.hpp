#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sustar/backends/certificate.hpp"
#include "sustar/backends/twisted_circle.hpp"
#include "sustar/backends/upper_triangular.hpp"
#include "sustar/dominated/dominant.hpp"
#include "sustar/io/json.hpp"
#include "sustar/suops/calculus.hpp"
#include "sustar/suops/inverse.hpp"
#include "sustar/verify/runner.hpp"

namespace sustar::cli {

using io::Json;

enum ExitCode : int { Ok = 0, ParseFailure = 1, PreconditionFailure = 2, NoConvergence = 3, ChecksFailed = 4 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSuite:
    case ErrorKind::UnknownFixture: return ParseFailure;
    case ErrorKind::NoConvergence: return NoConvergence;
    default: return PreconditionFailure;
  }
}

inline const std::vector<std::string>& compute_ops() {
  static const std::vector<std::string> ops{"sqrt",    "abs",    "pospart", "vee",      "wedge",
                                            "inverse", "seminorm", "metric", "polycalc", "downarrow"};
  return ops;
}

inline Json sqrt_json(const SqrtReport<Matrix>& r) {
  return Json{{"iterations", r.iterations}, {"residual", r.residual}, {"commutant_defect", r.commutant_defect}};
}
inline Json sqrt_json(const SqrtReport<ComplexVector>& r) {
  return Json{{"iterations", r.iterations}, {"residual", r.residual}, {"commutant_defect", r.commutant_defect}};
}

namespace detail {

struct Loaded {
  std::variant<MatrixAlgebra, FunctionAlgebra, PolynomialAlgebra> alg;
  std::variant<Matrix, ComplexVector, Polynomial> value;
};

inline Loaded load(const io::ElementInput& in) {
  return std::visit(
      [](const auto& x) -> Loaded {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, io::MatrixInput>)
          return {MatrixAlgebra(static_cast<int>(x.value.rows())), x.value};
        else if constexpr (std::is_same_v<T, io::FunctionInput>)
          return {FunctionAlgebra(x.points), x.values};
        else
          return {PolynomialAlgebra(x.nvars, x.samples), x.value};
      },
      in);
}

inline Json element_json(const MatrixAlgebra&, const Matrix& m) { return io::to_json(m); }
inline Json element_json(const FunctionAlgebra& alg, const ComplexVector& f) { return io::to_json(alg, f); }
inline Json element_json(const PolynomialAlgebra& alg, const Polynomial& p) { return io::to_json(alg, p); }

inline Json norm_json(const ExtendedNorm& n) {
  if (!n.is_finite()) return Json{{"value", nullptr}, {"bounded", false}};
  return Json{{"value", n.value()}, {"bounded", true}};
}

template <class A>
void require_same_shape(const A& a, const A& b);
template <>
inline void require_same_shape(const MatrixAlgebra& a, const MatrixAlgebra& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::BackendMismatch, "operands have different dims");
}
template <>
inline void require_same_shape(const FunctionAlgebra& a, const FunctionAlgebra& b) {
  if (a.points() != b.points()) throw Error(ErrorKind::BackendMismatch, "operands live on different point sets");
}
template <>
inline void require_same_shape(const PolynomialAlgebra& a, const PolynomialAlgebra& b) {
  if (a.nvars() != b.nvars() || a.samples() != b.samples())
    throw Error(ErrorKind::BackendMismatch, "operands have different variables or sample sets");
}

template <class A, class E>
Json unary(const std::string& op, const A& alg, const E& a) {
  if (op == "seminorm") {
    Json out = norm_json(uniform_seminorm(alg, a));
    out["op"] = op;
    return out;
  }
  if constexpr (std::is_same_v<A, PolynomialAlgebra>) {
    throw Error(ErrorKind::NotApplicable, op + " is not available on the polynomial backend");
  } else {
    if (op == "sqrt") {
      const auto r = sqrt_bounded(alg, a);
      Json out{{"op", op}, {"result", element_json(alg, r.result)}};
      out.update(sqrt_json(r));
      return out;
    }
    if (op == "abs") {
      const auto r = abs_report(alg, a);
      Json out{{"op", op}, {"result", element_json(alg, r.result)}};
      out.update(sqrt_json(r));
      return out;
    }
    if (op == "pospart") {
      const auto p = pos_neg_parts(alg, a);
      return Json{{"op", op},
                  {"result", element_json(alg, p.pos)},
                  {"negative_part", element_json(alg, p.neg)},
                  {"orthogonality_defect", alg.size(alg.mul(p.pos, p.neg))}};
    }
    if (op == "inverse") {
      const auto r = inverse_coercive(alg, a);
      return Json{{"op", op},
                  {"result", element_json(alg, r.result)},
                  {"iterations", r.iterations},
                  {"defect", r.defect},
                  {"epsilon", r.epsilon}};
    }
    throw Error(ErrorKind::ParseError, "operation " + op + " needs --rhs");
  }
}

template <class A, class E>
Json binary(const std::string& op, const A& alg, const E& a, const A& rhs_alg, const E& b) {
  require_same_shape(alg, rhs_alg);
  if (op == "metric") return Json{{"op", op}, {"value", uniform_metric(alg, a, b)}};
  if constexpr (std::is_same_v<A, PolynomialAlgebra>) {
    throw Error(ErrorKind::NotApplicable, op + " is not available on the polynomial backend");
  } else {
    const auto r = op == "vee" ? vee_report(alg, a, b) : wedge_report(alg, a, b);
    return Json{{"op", op},
                {"result", element_json(alg, r.result)},
                {"algebraic_defect", r.algebraic_defect},
                {"bicommutant_defect", r.bicommutant_defect},
                {"probes", r.probes}};
  }
}

inline bool is_binary(const std::string& op) { return op == "vee" || op == "wedge" || op == "metric"; }

/// {"vars":N,"terms":[...],"tuple":[element, ...]}; the tuple lives in one backend.
inline Json polycalc(const Json& in) {
  const RealPolynomial q = io::real_polynomial_from_json(in);
  const Json& tuple_j = io::field(in, "tuple");
  if (!tuple_j.is_array() || tuple_j.size() != q.nvars) io::parse_error("tuple must hold one element per variable");
  std::vector<Loaded> tuple;
  for (const Json& e : tuple_j) tuple.push_back(load(io::element_from_json(e)));
  return std::visit(
      [&](const auto& alg) -> Json {
        using A = std::decay_t<decltype(alg)>;
        using E = element_t<A>;
        std::vector<E> xs;
        for (const auto& t : tuple) {
          const A* other = std::get_if<A>(&t.alg);
          if (!other) throw Error(ErrorKind::BackendMismatch, "tuple elements must share one backend");
          require_same_shape(alg, *other);
          xs.push_back(std::get<E>(t.value));
        }
        const E value = polynomial_calculus(alg, q, std::span<const E>(xs));
        Json out{{"op", "polycalc"}, {"result", element_json(alg, value)}};
        if constexpr (OrderedStarAlgebra<A>) out["positive"] = alg.is_positive(re_part(alg, value));
        return out;
      },
      tuple.front().alg);
}

/// --in: matrix at the top tower dim; --rhs: optional Hamiltonian spec (default demo).
inline Json downarrow(const Json& in, const std::optional<Json>& rhs) {
  const HamiltonianSpec spec = rhs ? io::hamiltonian_from_json(*rhs) : HamiltonianSpec::demo();
  const TruncationTower tower(spec);
  const Matrix a = io::matrix_from_json(in);
  const auto dominant = hamiltonian_dominant_set(tower);
  const Membership m = in_downarrow(tower, dominant, tower.restrict(a));
  Json out{{"op", "downarrow"}, {"member", m.member}, {"dims", spec.dims}};
  if (m.member) out["witness"] = Json{{"n", m.n}, {"lambda", m.lambda}};
  else out["failed_clause"] = m.failed_clause;
  if (!m.diagnostic.empty()) out["diagnostic"] = m.diagnostic;
  out["model"] = "uniform witness over the truncation tower";
  return out;
}

}  // namespace detail

/// One operation on parsed JSON inputs.
inline Json compute(const std::string& op, const Json& in, const std::optional<Json>& rhs) {
  if (std::find(compute_ops().begin(), compute_ops().end(), op) == compute_ops().end())
    io::parse_error("unknown operation \"" + op + "\"");
  if (op == "polycalc") return detail::polycalc(in);
  if (op == "downarrow") return detail::downarrow(in, rhs);

  const detail::Loaded a = detail::load(io::element_from_json(in));
  if (detail::is_binary(op)) {
    if (!rhs) io::parse_error("operation " + op + " needs --rhs");
    const detail::Loaded b = detail::load(io::element_from_json(*rhs));
    if (a.alg.index() != b.alg.index()) throw Error(ErrorKind::BackendMismatch, "operands use different backends");
    return std::visit(
        [&](const auto& alg) -> Json {
          using A = std::decay_t<decltype(alg)>;
          using E = element_t<A>;
          return detail::binary(op, alg, std::get<E>(a.value), std::get<A>(b.alg), std::get<E>(b.value));
        },
        a.alg);
  }
  return std::visit(
      [&](const auto& alg) -> Json {
        using E = element_t<std::decay_t<decltype(alg)>>;
        return detail::unary(op, alg, std::get<E>(a.value));
      },
      a.alg);
}

inline std::string check_line(const std::string& name, bool ok) { return name + " : " + (ok ? "pass" : "FAIL"); }

inline Json fixture(const std::string& name) {
  if (name == "twisted-circle") {
    const TwistedCircle circle(8);
    const auto id = circle.identity();
    const GenPosCertificate<ComplexVector> cert{{circle.one(), id}};
    const auto minus_one = circle.scale(Scalar{-1.0}, circle.one());
    Json grid = Json::array();
    for (Eigen::Index k = 0; k < circle.n(); ++k) grid.push_back(io::to_json(circle.grid_point(k)));
    Json idj = Json::array();
    for (Eigen::Index k = 0; k < id.size(); ++k) idj.push_back(io::to_json(id(k)));
    return Json{{"fixture", name},
                {"grid", std::move(grid)},
                {"star", "f*(z) = conj(f(-z))"},
                {"identity", std::move(idj)},
                {"certificate", Json::array({Json{{"weight", "1"}, {"factor", "id"}}})},
                {"checks", Json::array({check_line("−𝟙 = id*·id", verify_genpos_certificate(circle, minus_one, cert))})}};
  }
  if (name == "upper-triangular") {
    const UpperTriangularFixture alg;
    const auto m = UpperTriangularFixture::make(0.0, 1.0);
    const auto w = UpperTriangularFixture::make(1.0, 0.0);
    auto elem = [](const UpperTriangularElement& x) { return Json{{"a", io::to_json(x.a)}, {"b", io::to_json(x.b)}}; };
    bool below_all = true;
    for (double eps : verify::kEpsilonGrid) below_all = below_all && order_leq(alg, m, alg.scale(Scalar{eps}, w));
    return Json{
        {"fixture", name},
        {"element", "M(a,b) = [[a,b],[0,a]]"},
        {"positivity", "Hermitian M(a,b) >= 0 iff a > 0 or a = b = 0"},
        {"nilpotent", elem(m)},
        {"checks", Json::array({check_line("M₍₀,₁₎² = 0", alg.mul(m, m) == alg.zero()),
                                check_line("M₍₀,₁₎ ≤ ε M₍₁,₀₎ for ε ∈ {1,1e-3,1e-6,1e-9}", below_all),
                                check_line("M₍₀,₁₎ ≰ 0", !order_leq(alg, m, alg.zero()))})}};
  }
  if (name == "hamiltonian-demo") return io::to_json(HamiltonianSpec::demo());
  throw Error(ErrorKind::UnknownFixture, "unknown fixture \"" + name + "\"");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"twisted-circle", "upper-triangular", "hamiltonian-demo"};
  return names;
}

}  // namespace sustar::cli
