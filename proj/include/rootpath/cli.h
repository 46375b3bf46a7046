/**
 * @file cli.h
 * @brief Request parsing, response rendering and path dumps for the
 *        rootpath command-line tool.
 *
 * Input is auto-detected from its first non-blank character:
 *   - '{' or '[': JSON. Either a bare array of coefficients or an object
 *     {"coefficients": [...], "steps": .., "tol": .., "seed": ..,
 *      "certify": .., "dump_paths": "..", "start": "unit"|"gamma",
 *      "path": "line"|"parabola", "max_restarts": ..}.
 *     A coefficient is [re, im] or a bare real number.
 *   - anything else: comma-separated real coefficients.
 * Coefficients are ascending (constant term first).
 */
#ifndef ROOTPATH_CLI_H
#define ROOTPATH_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootpath/certify.h"

namespace rootpath::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitSolverFailure = 3;

struct SolveRequest {
  std::vector<Complex> coefficients;
  std::optional<int> steps;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<bool> certify;
  std::optional<std::string> dump_paths;
  std::optional<StartSystem> start;
  std::optional<PathShape> path;
  std::optional<int> max_restarts;

  friend bool operator==(const SolveRequest&, const SolveRequest&) = default;
};

/// Throws ParseError (with a byte offset) on malformed numbers, non-finite
/// values, fewer than 2 coefficients, or bad config values.
SolveRequest parse_input(std::string_view text);

/// Canonical JSON form; parse_input(format_request(r)) == r.
std::string format_request(const SolveRequest& request);

/// Options used for a request: defaults overridden by whatever it sets.
SolveOptions options_for(const SolveRequest& request);

struct RootEntry {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
  double residual = 0.0;
  bool certified = false;
  std::vector<int> path_indices;
};

struct SolveResponse {
  bool success = false;
  int exit_code = kExitSuccess;
  std::string error;
  std::vector<RootEntry> roots;
  SolveDiagnostics diagnostics;
  /// Paths of the tracking run, for dump_paths. Not part of the document.
  std::vector<TrackedPath> paths;
};

/// Runs solve() and wraps the outcome; never throws on solver failure.
SolveResponse run(const SolveRequest& request);

/// JSON document written to stdout, newline terminated.
std::string render_response(const SolveResponse& response);

/// CSV with header "path,t,re,im,residual", rows sorted by (path, t), 17
/// significant digits.
void dump_paths(std::span<const TrackedPath> paths, std::ostream& out);

/// dump_paths into a file; throws Error when the file cannot be written.
void write_path_dump(std::span<const TrackedPath> paths, const std::string& filename);

}  // namespace rootpath::cli

#endif  // ROOTPATH_CLI_H
