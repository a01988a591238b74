#include <gtest/gtest.h>

#include "sustar/backends/random.hpp"
#include "sustar/io/json.hpp"

using namespace sustar;

namespace {

ErrorKind parse_kind(const std::string& text) {
  try {
    io::element_from_json(io::parse_text(text));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::PostconditionFailed;
}

}  // namespace

TEST(Json, MatrixRoundTripIsBitExact) {
  Rng rng(31);
  for (int n = 1; n <= 6; ++n) {
    const Matrix m = std::exp(uniform(rng, -20, 20)) * random_complex_matrix(n, rng);
    const auto back = io::element_from_json(io::parse_text(io::dump(io::to_json(m))));
    ASSERT_TRUE(std::holds_alternative<io::MatrixInput>(back));
    EXPECT_TRUE(std::get<io::MatrixInput>(back).value == m);
  }
}

TEST(Json, FunctionRoundTripIsBitExact) {
  Rng rng(32);
  const FunctionAlgebra alg({0.1, 1.0 / 3.0, 7.0});
  const ComplexVector f = random_complex_vector(3, rng);
  const auto back = io::element_from_json(io::parse_text(io::dump(io::to_json(alg, f))));
  const auto& fi = std::get<io::FunctionInput>(back);
  EXPECT_TRUE(fi.values == f);
  EXPECT_EQ(fi.points, alg.points());
}

TEST(Json, PolynomialRoundTrip) {
  const PolynomialAlgebra alg(2, {{0.0, 1.0}, {0.25, -2.0}});
  const Polynomial p = alg.add(alg.mul(alg.variable(0), alg.variable(1)), alg.constant(Scalar(0.5, -1.5)));
  const auto back = io::element_from_json(io::parse_text(io::dump(io::to_json(alg, p))));
  const auto& pi = std::get<io::PolynomialInput>(back);
  EXPECT_EQ(pi.nvars, 2u);
  EXPECT_EQ(pi.value.terms, p.terms);
  EXPECT_EQ(pi.samples, alg.samples());
}

TEST(Json, RealNumbersAreAcceptedAsScalars) {
  const auto in = io::element_from_json(io::parse_text(R"({"backend":"matrix","dim":1,"data":[[2.5]]})"));
  EXPECT_EQ(std::get<io::MatrixInput>(in).value(0, 0), Scalar(2.5));
}

TEST(Json, HamiltonianRoundTrip) {
  const auto spec = HamiltonianSpec::demo();
  const auto back = io::hamiltonian_from_json(io::to_json(spec));
  EXPECT_EQ(back.eigenvalues, spec.eigenvalues);
  EXPECT_EQ(back.dims, spec.dims);
}

TEST(Json, ParseErrors) {
  EXPECT_EQ(parse_kind(R"({"backend":"matrix","dim":2,"data":[[1,0]])"), ErrorKind::ParseError);  // truncated
  EXPECT_EQ(parse_kind(R"({"dim":1,"data":[[1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"backend":"quaternion"})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"backend":"matrix","dim":2,"data":[[1,0]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"backend":"matrix","dim":0,"data":[]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"backend":"matrix","dim":1,"data":[["x"]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"backend":"matrix","dim":1,"data":[[[1,2,3]]]})"), ErrorKind::ParseError);
}

TEST(Json, MissingFileIsParseError) {
  try {
    io::read_json_file("/nonexistent/input.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}
