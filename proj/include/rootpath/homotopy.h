/**
 * @file homotopy.h
 * @brief Coefficient paths, the homotopy H(t, x) they define, and the
 *        Newton path tracker that follows the d roots from t = 0 to t = 1.
 *
 * A coefficient path maps t in [0, 1] to a coefficient vector of fixed formal
 * degree d. Every kind is a straight line L(s) = (1 - s) start + s target
 * evaluated at a reparametrisation s(t):
 *
 *   straight_line, gamma_rotated   s = t
 *   parabolic_arc                  s = t + i c t (1 - t)       (complex s)
 *   segment_restricted             s = eps + t (1 - eps)
 *
 * gamma_rotated fixes start = e^{i theta} (x^d - 1).
 *
 * The tracker uses no predictor. At each t_n = n / N every root takes one
 * Newton step of H(t_n, .) from its previous value, followed by at most
 * corrector_iterations - 1 repair steps until the relative residual
 * |H| / sum_i |phi_i| max(1,|z|)^i drops to residual_tol.
 */
#ifndef ROOTPATH_HOMOTOPY_H
#define ROOTPATH_HOMOTOPY_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootpath/complex_poly.h"

namespace rootpath {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits, identical on every
/// standard library.
double uniform01(Rng& rng);

/// Uniform angle in [0, 2 pi).
double random_angle(Rng& rng);

/// Relative scale for residuals: sum_i |c_i| max(1, |z|)^i.
double residual_scale(const Polynomial& p, Complex z);

enum class PathKind { straight_line, gamma_rotated, parabolic_arc, segment_restricted };

const char* to_string(PathKind kind);

class CoefficientPath {
 public:
  /// (1 - t) start + t target. Both are padded to the larger formal degree.
  static CoefficientPath straight_line(const Polynomial& start, const Polynomial& target);

  /// (1 - t) e^{i theta} (x^d - 1) + t target, d = target.degree().
  static CoefficientPath gamma_rotated(const Polynomial& target, double theta);

  /// L(s(t)) with s = t + i c t (1 - t) over the line from start to target.
  static CoefficientPath parabolic_arc(const Polynomial& start, const Polynomial& target,
                                       double arc_constant);

  /// L(eps + t (1 - eps)) over the line from start to target, 0 <= eps < 1.
  static CoefficientPath segment_restricted(const Polynomial& start, const Polynomial& target,
                                            double restriction);

  PathKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return start_.degree(); }
  /// Endpoints of the underlying line.
  const Polynomial& line_start() const noexcept { return start_; }
  const Polynomial& line_target() const noexcept { return target_; }
  double theta() const noexcept { return theta_; }
  double arc_constant() const noexcept { return arc_constant_; }
  double restriction() const noexcept { return restriction_; }

  /// Parameter of the underlying line reached at time t.
  Complex line_parameter(double t) const;

  /// Coefficients at time t; at(1) is the target exactly.
  Polynomial at(double t) const;

 private:
  CoefficientPath(PathKind kind, Polynomial start, Polynomial target);

  PathKind kind_;
  Polynomial start_;
  Polynomial target_;
  double theta_ = 0.0;
  double arc_constant_ = 0.0;
  double restriction_ = 0.0;
};

/// H(t, x) = phi_0(t) + ... + phi_d(t) x^d for a coefficient path phi.
class HomotopySystem {
 public:
  explicit HomotopySystem(CoefficientPath path) : path_(std::move(path)) {}

  const CoefficientPath& path() const noexcept { return path_; }
  int degree() const noexcept { return path_.degree(); }
  Polynomial coefficients(double t) const { return path_.at(t); }

  /// (H(t, x), dH/dx(t, x)).
  std::pair<Complex, Complex> evaluate(double t, Complex x) const;

 private:
  CoefficientPath path_;
};

enum class PathStatus { tracking, converged, aborted_escape, aborted_singular };

const char* to_string(PathStatus status);

struct PathSample {
  double t = 0.0;
  Complex z;
  /// Absolute |H(t, z)|.
  double residual = 0.0;
};

struct TrackedPath {
  /// 1-based path index.
  int index = 0;
  std::vector<PathSample> samples;
  PathStatus status = PathStatus::tracking;
  /// Size of the last Newton step(s) at t = 1; feeds the clustering radius.
  double final_step = 0.0;
};

struct TrackerConfig {
  int steps = 256;
  int corrector_iterations = 3;
  /// Relative residual accepted after a corrector step.
  double residual_tol = 1e-9;
  /// Minimum pairwise distance between iterates, relative to the escape radius.
  double min_separation = 1e-7;
  int max_restarts = 6;
  std::uint64_t seed = 0;
  /// |dH/dx| below derivative_floor * max_i |phi_i(t)| is a singular step.
  double derivative_floor = 1e-10;
  /// Newton iterations allowed at t = 1 when the target is singular.
  int endgame_iterations = 100;
};

/// Throws InvalidInput on a config violating its invariants.
void validate(const TrackerConfig& cfg);

enum class TrackMode {
  /// Every t-step, including t = 1, enforces separation and the derivative floor.
  regular,
  /// The target may have multiple roots: the t = 1 step runs Newton on the
  /// target until its residual stagnates and skips the separation check.
  singular_endpoint,
};

struct TrackResult {
  std::vector<TrackedPath> paths;
  double escape_radius = 0.0;
  long newton_steps = 0;
  bool success = false;
  /// Two iterates met at the very last step (regular mode only).
  bool collapsed_at_end = false;
  std::string failure;
};

/// e^{2 pi i k / d}, k = 0..d-1.
std::vector<Complex> roots_of_unity_start(int d);

/// z - H(t,z) / dH/dx(t,z). Throws SingularStepError when
/// |dH/dx| < derivative_floor * max_i |phi_i(t)|.
Complex newton_step(const HomotopySystem& system, double t, Complex z,
                    double derivative_floor = 1e-10);

/// Follows start_roots (roots of system at t = 0) over t_n = n / cfg.steps.
/// Stops at the first aborted path; the others keep status tracking.
TrackResult track(const HomotopySystem& system, std::span<const Complex> start_roots,
                  const TrackerConfig& cfg, TrackMode mode = TrackMode::regular);

/// Tracks f from e^{i theta}(x^d - 1) with theta drawn from cfg.seed.
/// f must have a non-negligible leading coefficient.
TrackResult track(const Polynomial& f, const TrackerConfig& cfg);

/// Cap on the number of discriminant samples taken along a candidate path.
inline constexpr int kMaxDiscriminantSamples = 4096;

/// min(16 d steps, kMaxDiscriminantSamples).
int discriminant_sample_count(int degree, int steps);

/// Parabolic arc over the line from p to q whose sampled discriminant stays
/// clear of the singular set. Candidate arc constants are 0, then
/// {+-1, +-2, +-4, +-8} in rng order, then uniform draws from [-16, 16].
/// Throws PathConstructionError if p or q is singular or every candidate
/// fails.
CoefficientPath build_avoiding_path(const Polynomial& p, const Polynomial& q, Rng& rng,
                                    int steps = 256);

/// Line from lead * e^{i theta} (x^d - 1) to f, restricted to [eps, 1] so
/// that the only sampled singular point left is the run ending at t = 1.
/// theta = 0 gives lead * (x^d - 1). Returns a straight_line path when no
/// restriction is needed, segment_restricted otherwise.
CoefficientPath degenerate_target_path(const Polynomial& f, double theta, int steps = 256);

}  // namespace rootpath

#endif  // ROOTPATH_HOMOTOPY_H
