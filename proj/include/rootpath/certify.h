/**
 * @file certify.h
 * @brief Endpoint refinement, approximate-root certification, clustering of
 *        path endpoints into multiplicities, and the solve() driver.
 */
#ifndef ROOTPATH_CERTIFY_H
#define ROOTPATH_CERTIFY_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootpath/complex_poly.h"
#include "rootpath/errors.h"
#include "rootpath/homotopy.h"

namespace rootpath {

/// Smale's alpha_0 = (13 - 3 sqrt 17) / 4.
inline constexpr double kAlphaZero = 0.15767078078675;

struct RootReport {
  Complex value;
  int multiplicity = 1;
  /// |f(value)|.
  double residual = 0.0;
  bool certified = false;
  /// 1-based indices of the paths that ended in this cluster.
  std::vector<int> path_indices;
  /// multiplicity_by_derivatives at value, 0 if it could not be evaluated.
  int derivative_check = 0;
};

struct RefineResult {
  Complex value;
  int iterations = 0;
  /// Stopped on |f| <= tol or on a step at round-off level.
  bool converged = false;
  /// |f'| fell below the floor; value is the unchanged input.
  bool singular = false;
};

/// Newton on f from z until |f(z)| <= tol, the step reaches round-off, or
/// max_iter iterations. A derivative below 1e-14 * sum|c'_i| max(1,|z|)^i
/// returns the input unchanged with singular set.
RefineResult refine(const Polynomial& f, Complex z, int max_iter = 50, double tol = 0.0);

struct AlphaEstimate {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// beta = |f/f'|, gamma = max_{k>=2} |f^{(k)} / (k! f')|^{1/(k-1)}, alpha = beta gamma.
/// nullopt when f'(z) = 0.
std::optional<AlphaEstimate> alpha_estimate(const Polynomial& f, Complex z);

/// alpha < kAlphaZero; false when f'(z) = 0.
bool alpha_certificate(const Polynomial& f, Complex z);

/// Single-linkage clustering of the d endpoints with linking radius tol.
/// Each cluster's value is its centroid, refined by Newton on f when the
/// cluster is a singleton and on f^{(mu-1)} when it has mu > 1 members.
/// Reports are ordered by their smallest path index; certified and
/// derivative_check are left for the caller.
/// Throws ClusterAmbiguityError when clustering at 2 * tol gives a different
/// partition, InvalidInput when endpoints.size() != f.degree().
std::vector<RootReport> cluster(std::span<const Complex> endpoints, const Polynomial& f,
                                double tol);

/// Smallest k >= 1 with |f^{(k)}(rho)| / k! > threshold * s_k, where
/// s_k = sum_i |c_i| C(i,k) |rho|^{i-k} bounds the k-th Taylor coefficient
/// from above. Requires |f(rho)| <= threshold * s_0 (InvalidInput otherwise);
/// throws Error if no order up to the degree qualifies.
int multiplicity_by_derivatives(const Polynomial& f, Complex rho, double threshold = 1e-10);

enum class StartSystem { unit, gamma };
enum class PathShape { line, parabola };
enum class Strategy { closed_form, generic, degenerate };

const char* to_string(Strategy s);

struct SolveOptions {
  TrackerConfig tracker;
  /// unit tracks from x^d - 1 on the first attempt; restarts always rotate.
  StartSystem start = StartSystem::gamma;
  PathShape path = PathShape::line;
  bool certify = true;
  /// Deflate each multiple root and re-solve the quotient as a cross-check.
  bool deflation_check = true;
  double multiplicity_threshold = 1e-10;
};

struct SolveDiagnostics {
  int degree = 0;
  double discriminant_modulus = 0.0;
  bool sigma_member = false;
  double escape_radius = 0.0;
  int restarts = 0;
  long newton_steps = 0;
  /// Step count N of the successful attempt.
  int steps = 0;
  Strategy strategy = Strategy::generic;
  double cluster_tolerance = 0.0;
  /// Restriction eps of the degenerate path, 0 when unrestricted.
  double restriction = 0.0;
};

struct SolveResult {
  std::vector<RootReport> reports;
  /// Paths of the successful tracking run (empty for the closed form).
  std::vector<TrackedPath> paths;
  SolveDiagnostics diagnostics;
};

/// All restarts failed. partial() holds what the last attempt produced.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, SolveResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const SolveResult& partial() const noexcept { return partial_; }

 private:
  SolveResult partial_;
};

/// Finds every root of f with multiplicity.
///
/// Leading coefficients are trimmed first. Degree 1 is solved in closed form.
/// Targets outside the singular set are tracked from the (rotated) unit start
/// system with the regular tracker; singular targets use
/// degenerate_target_path and an endgame at t = 1, after which every multiple
/// root is deflated and the quotient re-solved as a consistency check. Any
/// failed attempt is retried with twice the steps and a fresh rotation, up to
/// tracker.max_restarts times.
///
/// Postcondition: multiplicities sum to the trimmed degree.
SolveResult solve(const Polynomial& f, const SolveOptions& options = {});

}  // namespace rootpath

#endif  // ROOTPATH_CERTIFY_H
