#include <gtest/gtest.h>

#include <cstdlib>
#include <sys/wait.h>

#include "sustar/cli/commands.hpp"

using namespace sustar;
using sustar::io::Json;

namespace {

Json data(const char* file) { return io::read_json_file(std::string(SUSTAR_TEST_DATA) + "/" + file); }

int run(const std::string& args) {
  const std::string cmd = std::string(SUSTAR_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Matrix result_matrix(const Json& j) { return io::matrix_from_json(j.at("result")); }

}  // namespace

TEST(Compute, SqrtOfDiagonal) {
  const Json out = cli::compute("sqrt", data("diag49.json"), std::nullopt);
  const Matrix r = result_matrix(out);
  EXPECT_NEAR(std::abs(r(0, 0) - 2.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(r(1, 1) - 3.0), 0.0, 1e-8);
  EXPECT_LE(out.at("residual").get<double>(), 1e-8 * 9);
}

TEST(Compute, SeminormOfIdentity) {
  const Json out = cli::compute("seminorm", data("identity3.json"), std::nullopt);
  EXPECT_TRUE(out.at("bounded").get<bool>());
  EXPECT_NEAR(out.at("value").get<double>(), 1.0, 1e-12);
}

TEST(Compute, VeeAndWedge) {
  const Matrix v = result_matrix(cli::compute("vee", data("diag15.json"), data("diag32.json")));
  const Matrix w = result_matrix(cli::compute("wedge", data("diag15.json"), data("diag32.json")));
  EXPECT_LE((v - diag({3, 5})).norm(), 1e-8);
  EXPECT_LE((w - diag({1, 2})).norm(), 1e-8);
}

TEST(Compute, InverseAndMetric) {
  const Matrix inv = result_matrix(cli::compute("inverse", data("diag49.json"), std::nullopt));
  EXPECT_LE((inv - diag({0.25, 1.0 / 9.0})).norm(), 1e-10);
  const Json m = cli::compute("metric", data("diag49.json"), data("diag49.json"));
  EXPECT_EQ(m.at("value").get<double>(), 0.0);
}

TEST(Compute, Polycalc) {
  const Json in = Json::parse(R"({"vars":1,"terms":[{"exps":[2],"coeff":1}],
    "tuple":[{"backend":"matrix","dim":2,"data":[[1,0],[0,-3]]}]})");
  const Json out = cli::compute("polycalc", in, std::nullopt);
  EXPECT_LE((result_matrix(out) - diag({1, 9})).norm(), 1e-14);
  EXPECT_TRUE(out.at("positive").get<bool>());
}

TEST(Compute, DownarrowUnit) {
  Json in = io::to_json(Matrix(Matrix::Identity(16, 16)));
  const Json out = cli::compute("downarrow", in, std::nullopt);
  EXPECT_TRUE(out.at("member").get<bool>());
  EXPECT_EQ(out.at("witness").at("n").get<int>(), 0);
}

TEST(Compute, Errors) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::PostconditionFailed;
  };
  EXPECT_EQ(kind([] { cli::compute("frobnicate", data("diag49.json"), std::nullopt); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { cli::compute("vee", data("diag49.json"), std::nullopt); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { cli::compute("vee", data("diag49.json"), data("identity3.json")); }),
            ErrorKind::BackendMismatch);
  EXPECT_EQ(kind([] { cli::compute("inverse", data("diag01.json"), std::nullopt); }), ErrorKind::NotCoercive);
  const Json poly = Json::parse(R"({"backend":"polynomial","vars":1,"terms":[{"exps":[1],"coeff":1}],"samples":[[0],[1]]})");
  EXPECT_EQ(kind([&] { cli::compute("sqrt", poly, std::nullopt); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind([] { cli::fixture("moebius"); }), ErrorKind::UnknownFixture);
}

TEST(Fixture, TwistedCircleCertificate) {
  const Json out = cli::fixture("twisted-circle");
  EXPECT_EQ(out.at("checks").at(0).get<std::string>(), "−𝟙 = id*·id : pass");
}

TEST(Fixture, UpperTriangular) {
  const Json out = cli::fixture("upper-triangular");
  for (const auto& c : out.at("checks")) EXPECT_NE(c.get<std::string>().find(": pass"), std::string::npos) << c;
}

TEST(ExitCodes, Binary) {
  const std::string d = SUSTAR_TEST_DATA;
  EXPECT_EQ(run("compute sqrt --in " + d + "/diag49.json"), 0);
  EXPECT_EQ(run("compute sqrt --in " + d + "/malformed.json"), 1);
  EXPECT_EQ(run("compute inverse --in " + d + "/diag01.json"), 2);
  EXPECT_EQ(run("compute inverse --in " + d + "/identity3.json"), 0);
  EXPECT_EQ(run("fixture no-such-fixture"), 1);
  EXPECT_EQ(run("verify --suite no-such-suite"), 1);
  EXPECT_EQ(run("verify --suite sqrt --backend ptlg"), 2);
  EXPECT_EQ(run("verify --suite ordersquare --trials 5"), 0);
  EXPECT_EQ(run("--no-such-flag"), 1);
}
