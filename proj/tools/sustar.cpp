#include <CLI11.hpp>
#include <iostream>

#include "sustar/cli/commands.hpp"

using namespace sustar;

namespace {

int run_verify(const verify::SuiteConfig& cfg, const std::string& out) {
  const verify::SuiteReport report = verify::run_suites(cfg);
  for (const auto& c : report.checks) std::cout << verify::summary_line(c) << "\n";
  std::cout << report.checks.size() << " checks, " << report.failed() << " failed\n";
  if (!out.empty()) io::write_text(out, io::dump(verify::to_json(report)));
  return report.passed() ? cli::Ok : cli::ChecksFailed;
}

int run_compute(const std::string& op, const std::string& in, const std::string& rhs, const std::string& out) {
  std::optional<io::Json> rhs_json;
  if (!rhs.empty()) rhs_json = io::read_json_file(rhs);
  io::write_text(out, io::dump(cli::compute(op, io::read_json_file(in), rhs_json)));
  return cli::Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sustar: constructive operations on ordered *-algebras and their property suites"};
  app.require_subcommand(1);

  verify::SuiteConfig cfg;
  std::string verify_out;
  double tol = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", cfg.suites, "suite name, repeatable; 'all' runs every suite");
  verify_cmd->add_option("--backend", cfg.backend, "matrix, function, polynomial, ptlg, tower or pathological");
  verify_cmd->add_option("--dim", cfg.dim, "matrix dim / number of function points")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", cfg.trials, "samples per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", cfg.seed, "PRNG seed");
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "overrides tol_pos, tol_eq and tol_comm")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify_out, "JSON report file");

  std::string op, in, rhs, compute_out;
  auto* compute_cmd = app.add_subcommand("compute", "apply one operation to JSON elements");
  compute_cmd->add_option("op", op, "operation")->required()->check(CLI::IsMember(cli::compute_ops()));
  compute_cmd->add_option("--in", in, "input element")->required();
  compute_cmd->add_option("--rhs", rhs, "second operand");
  compute_cmd->add_option("--out", compute_out, "output file (stdout by default)");

  std::string fixture_name, fixture_out;
  auto* fixture_cmd = app.add_subcommand("fixture", "emit a fixture and its defining identity checks");
  fixture_cmd->add_option("name", fixture_name, "twisted-circle, upper-triangular or hamiltonian-demo")->required();
  fixture_cmd->add_option("--out", fixture_out, "output file (stdout by default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::Ok : cli::ParseFailure;
  }

  try {
    if (*verify_cmd) {
      if (*tol_opt) cfg.tol = tol;
      return run_verify(cfg, verify_out);
    }
    if (*compute_cmd) return run_compute(op, in, rhs, compute_out);
    io::write_text(fixture_out, io::dump(cli::fixture(fixture_name)));
    return cli::Ok;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::PreconditionFailure;
  }
}
