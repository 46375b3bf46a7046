/**
 * @file rootpath.cpp
 * @brief Command-line front end: reads coefficients, solves, prints JSON.
 */
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootpath/cli.h"
#include "rootpath/errors.h"

namespace {

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rootpath;
  CLI::App app{"Find all complex roots of a univariate polynomial by homotopy continuation"};

  std::string input;
  std::optional<int> steps;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool no_certify = false;
  std::optional<std::string> dump_file;
  std::optional<std::string> start;
  std::optional<std::string> path;
  std::optional<int> max_restarts;

  app.add_option("coefficients", input,
                 "Ascending coefficients: \"c0,c1,...\" or a JSON document (read from stdin "
                 "when omitted)");
  app.add_option("--steps", steps, "Number of tracking steps N")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the random rotation");
  app.add_flag("--no-certify", no_certify, "Skip the alpha-test certificate");
  app.add_option("--dump-paths", dump_file, "Write tracked path samples to this CSV file");
  app.add_option("--start", start, "Start system")->check(CLI::IsMember({"unit", "gamma"}));
  app.add_option("--path", path, "Path shape")->check(CLI::IsMember({"line", "parabola"}));
  app.add_option("--max-restarts", max_restarts, "Maximum number of restarts")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParseError;
  }

  cli::SolveRequest request;
  try {
    request = cli::parse_input(input.empty() ? read_stdin() : input);
  } catch (const ParseError& e) {
    std::cerr << "rootpath: parse error: " << e.what() << "\n";
    return cli::kExitParseError;
  }

  if (steps) request.steps = steps;
  if (tol) request.tol = tol;
  if (seed) request.seed = seed;
  if (no_certify) request.certify = false;
  if (dump_file) request.dump_paths = dump_file;
  if (start) request.start = *start == "unit" ? StartSystem::unit : StartSystem::gamma;
  if (path) request.path = *path == "line" ? PathShape::line : PathShape::parabola;
  if (max_restarts) request.max_restarts = max_restarts;

  cli::SolveResponse response;
  try {
    validate(cli::options_for(request).tracker);
    response = cli::run(request);
  } catch (const InvalidInput& e) {
    std::cerr << "rootpath: " << e.what() << "\n";
    return cli::kExitParseError;
  }

  std::cout << cli::render_response(response);
  if (!response.success) std::cerr << "rootpath: solve failed: " << response.error << "\n";

  if (request.dump_paths && !response.paths.empty()) {
    try {
      cli::write_path_dump(response.paths, *request.dump_paths);
    } catch (const Error& e) {
      std::cerr << "rootpath: " << e.what() << "\n";
      return cli::kExitSolverFailure;
    }
  }
  return response.exit_code;
}
