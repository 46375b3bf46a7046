#include "rootpath/homotopy.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "rootpath/bounds.h"
#include "rootpath/errors.h"
#include "rootpath/resultants.h"

namespace rootpath {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double random_angle(Rng& rng) { return 2.0 * std::numbers::pi * uniform01(rng); }

double residual_scale(const Polynomial& p, Complex z) {
  const double r = std::max(1.0, std::abs(z));
  double s = 0.0;
  double power = 1.0;
  for (const auto& c : p.coeffs()) {
    s += std::abs(c) * power;
    power *= r;
  }
  return s;
}

const char* to_string(PathKind kind) {
  switch (kind) {
    case PathKind::straight_line: return "straight_line";
    case PathKind::gamma_rotated: return "gamma_rotated";
    case PathKind::parabolic_arc: return "parabolic_arc";
    case PathKind::segment_restricted: return "segment_restricted";
  }
  return "unknown";
}

const char* to_string(PathStatus status) {
  switch (status) {
    case PathStatus::tracking: return "tracking";
    case PathStatus::converged: return "converged";
    case PathStatus::aborted_escape: return "aborted_escape";
    case PathStatus::aborted_singular: return "aborted_singular";
  }
  return "unknown";
}

namespace {

Polynomial pad_to(const Polynomial& p, int degree) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  c.resize(static_cast<std::size_t>(degree) + 1);
  return Polynomial(std::move(c));
}

Polynomial unit_start(int d, Complex scale) {
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
  c.front() = -scale;
  c.back() = scale;
  return Polynomial(std::move(c));
}

Polynomial line_point(const Polynomial& p, const Polynomial& q, Complex s) {
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<Complex> c(a.size());
  const Complex one_minus = Complex{1.0, 0.0} - s;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = one_minus * a[i] + s * b[i];
  return Polynomial(std::move(c));
}

}  // namespace

CoefficientPath::CoefficientPath(PathKind kind, Polynomial start, Polynomial target)
    : kind_(kind), start_(std::move(start)), target_(std::move(target)) {
  const int d = std::max(start_.degree(), target_.degree());
  if (start_.degree() != d) start_ = pad_to(start_, d);
  if (target_.degree() != d) target_ = pad_to(target_, d);
}

CoefficientPath CoefficientPath::straight_line(const Polynomial& start, const Polynomial& target) {
  return CoefficientPath(PathKind::straight_line, start, target);
}

CoefficientPath CoefficientPath::gamma_rotated(const Polynomial& target, double theta) {
  if (target.degree() < 1) throw InvalidInput("gamma_rotated path needs degree >= 1");
  CoefficientPath path(PathKind::gamma_rotated,
                       unit_start(target.degree(), std::polar(1.0, theta)), target);
  path.theta_ = theta;
  return path;
}

CoefficientPath CoefficientPath::parabolic_arc(const Polynomial& start, const Polynomial& target,
                                               double arc_constant) {
  if (!std::isfinite(arc_constant)) throw InvalidInput("arc constant must be finite");
  CoefficientPath path(PathKind::parabolic_arc, start, target);
  path.arc_constant_ = arc_constant;
  return path;
}

CoefficientPath CoefficientPath::segment_restricted(const Polynomial& start,
                                                    const Polynomial& target,
                                                    double restriction) {
  if (!(restriction >= 0.0 && restriction < 1.0)) {
    throw InvalidInput("segment restriction must lie in [0, 1)");
  }
  CoefficientPath path(PathKind::segment_restricted, start, target);
  path.restriction_ = restriction;
  return path;
}

Complex CoefficientPath::line_parameter(double t) const {
  if (t == 1.0) return Complex{1.0, 0.0};
  switch (kind_) {
    case PathKind::parabolic_arc: return {t, arc_constant_ * t * (1.0 - t)};
    case PathKind::segment_restricted: return {restriction_ + t * (1.0 - restriction_), 0.0};
    default: return {t, 0.0};
  }
}

Polynomial CoefficientPath::at(double t) const {
  if (t == 1.0) return target_;
  if (t == 0.0 && kind_ != PathKind::segment_restricted) return start_;
  return line_point(start_, target_, line_parameter(t));
}

std::pair<Complex, Complex> HomotopySystem::evaluate(double t, Complex x) const {
  return eval_with_derivative(path_.at(t), x);
}

void validate(const TrackerConfig& cfg) {
  if (cfg.steps < 1) throw InvalidInput("tracker steps must be >= 1");
  if (cfg.corrector_iterations < 1) throw InvalidInput("corrector iterations must be >= 1");
  if (!(cfg.residual_tol > 0.0)) throw InvalidInput("residual threshold must be positive");
  if (!(cfg.min_separation > 0.0)) throw InvalidInput("minimum separation must be positive");
  if (!(cfg.derivative_floor > 0.0)) throw InvalidInput("derivative floor must be positive");
  if (cfg.max_restarts < 0) throw InvalidInput("max restarts must be >= 0");
  if (cfg.endgame_iterations < 1) throw InvalidInput("endgame iterations must be >= 1");
}

std::vector<Complex> roots_of_unity_start(int d) {
  if (d < 1) throw InvalidInput("roots of unity need d >= 1");
  std::vector<Complex> roots(static_cast<std::size_t>(d));
  roots[0] = 1.0;
  for (int k = 1; k < d; ++k) {
    // Exact values on the axes.
    if (4 * k == d) roots[k] = {0.0, 1.0};
    else if (2 * k == d) roots[k] = {-1.0, 0.0};
    else if (4 * k == 3 * d) roots[k] = {0.0, -1.0};
    else roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  return roots;
}

Complex newton_step(const HomotopySystem& system, double t, Complex z, double derivative_floor) {
  const Polynomial coeffs = system.coefficients(t);
  const auto [h, dh] = eval_with_derivative(coeffs, z);
  if (std::abs(dh) < derivative_floor * coeffs.max_abs()) {
    throw SingularStepError("dH/dx is below the derivative floor; iterate is near the singular set");
  }
  return z - h / dh;
}

namespace {

double time_at(int n, int steps) {
  return n == steps ? 1.0 : static_cast<double>(n) / steps;
}

struct StepOutcome {
  Complex z;
  double last_step = 0.0;
  int newton = 0;
  bool ok = false;
  bool singular = false;
};

StepOutcome correct(const Polynomial& coeffs, Complex z, const TrackerConfig& cfg, int cap) {
  StepOutcome out{z};
  const double floor = cfg.derivative_floor * coeffs.max_abs();
  for (int k = 0; k < cap; ++k) {
    const auto [h, dh] = eval_with_derivative(coeffs, out.z);
    if (!(std::abs(dh) >= floor)) {
      out.singular = true;
      return out;
    }
    const Complex step = h / dh;
    out.z -= step;
    ++out.newton;
    out.last_step = std::abs(step);
    if (!is_finite(out.z)) {
      out.singular = true;
      return out;
    }
    if (std::abs(eval(coeffs, out.z)) <= cfg.residual_tol * residual_scale(coeffs, out.z)) {
      out.ok = true;
      return out;
    }
  }
  return out;
}

// Newton on the target until its residual stops improving. The reported step
// is the largest of the few steps leading to the best iterate: near a multiple
// root this tracks the distance still to go.
StepOutcome endgame(const Polynomial& target, Complex z, const TrackerConfig& cfg) {
  StepOutcome out{z};
  Complex best = z;
  double best_res = std::abs(eval(target, z));
  std::array<double, 4> window{};
  std::size_t filled = 0;
  int stall = 0;
  for (int it = 0; it < cfg.endgame_iterations && best_res > 0.0; ++it) {
    const auto [h, dh] = eval_with_derivative(target, out.z);
    if (dh == Complex{}) break;
    const Complex step = h / dh;
    const Complex next = out.z - step;
    if (!is_finite(next)) break;
    out.z = next;
    ++out.newton;
    window[filled++ % window.size()] = std::abs(step);
    const double res = std::abs(eval(target, out.z));
    if (res < best_res) {
      best_res = res;
      best = out.z;
      out.last_step = *std::max_element(window.begin(), window.end());
      stall = 0;
    } else if (++stall >= 8) {
      break;
    }
  }
  out.z = best;
  out.ok = best_res <= cfg.residual_tol * residual_scale(target, best);
  return out;
}

}  // namespace

TrackResult track(const HomotopySystem& system, std::span<const Complex> start_roots,
                  const TrackerConfig& cfg, TrackMode mode) {
  validate(cfg);
  const int d = system.degree();
  if (d < 1) throw InvalidInput("tracking needs degree >= 1");
  if (start_roots.size() != static_cast<std::size_t>(d)) {
    throw InvalidInput("tracking needs exactly d start roots");
  }
  const int steps = cfg.steps;

  TrackResult result;
  result.paths.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    result.paths[j].index = j + 1;
    result.paths[j].samples.reserve(static_cast<std::size_t>(steps) + 1);
  }

  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<std::size_t>(steps) + 1);
  for (int n = 0; n <= steps; ++n) coeffs.push_back(system.coefficients(time_at(n, steps)));
  try {
    result.escape_radius = homotopy_escape_radius(coeffs);
  } catch (const PathConstructionError& e) {
    for (auto& p : result.paths) p.status = PathStatus::aborted_escape;
    result.failure = e.what();
    return result;
  }
  const double limit = kEscapeSlack * result.escape_radius;
  const double min_gap = cfg.min_separation * result.escape_radius;

  std::vector<Complex> z(start_roots.begin(), start_roots.end());
  for (int j = 0; j < d; ++j) {
    result.paths[j].samples.push_back({0.0, z[j], std::abs(eval(coeffs[0], z[j]))});
  }

  for (int n = 1; n <= steps; ++n) {
    const double t = time_at(n, steps);
    const Polynomial& at_t = coeffs[n];
    const bool final_endgame = mode == TrackMode::singular_endpoint && n == steps;
    // Singular-endpoint mode repairs with the endgame budget.
    const int cap = mode == TrackMode::singular_endpoint
                        ? std::max(cfg.corrector_iterations, cfg.endgame_iterations)
                        : cfg.corrector_iterations;
    for (int j = 0; j < d; ++j) {
      auto& path = result.paths[j];
      const StepOutcome step = final_endgame ? endgame(at_t, z[j], cfg) : correct(at_t, z[j], cfg, cap);
      result.newton_steps += step.newton;
      if (!step.ok) {
        path.status = PathStatus::aborted_singular;
        result.failure = "path " + std::to_string(j + 1) +
                         (step.singular ? " hit the derivative floor" : " failed the residual gate") +
                         " at t = " + std::to_string(t);
        return result;
      }
      if (std::abs(step.z) > limit) {
        path.status = PathStatus::aborted_escape;
        result.failure = "path " + std::to_string(j + 1) + " left the escape disk at t = " +
                         std::to_string(t);
        return result;
      }
      z[j] = step.z;
      if (n == steps) path.final_step = step.last_step;
      path.samples.push_back({t, z[j], std::abs(eval(at_t, z[j]))});
    }
    if (final_endgame) continue;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (std::abs(z[a] - z[b]) < min_gap) {
          result.paths[a].status = PathStatus::aborted_singular;
          result.paths[b].status = PathStatus::aborted_singular;
          result.collapsed_at_end = n == steps;
          result.failure = "paths " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " collided at t = " + std::to_string(t);
          return result;
        }
      }
    }
  }
  for (auto& p : result.paths) p.status = PathStatus::converged;
  result.success = true;
  return result;
}

TrackResult track(const Polynomial& f, const TrackerConfig& cfg) {
  const Polynomial target = f.trimmed();
  if (target.degree() < 1) throw InvalidInput("tracking needs degree >= 1 after trimming");
  Rng rng(cfg.seed);
  const HomotopySystem system(CoefficientPath::gamma_rotated(target, random_angle(rng)));
  const auto start = roots_of_unity_start(target.degree());
  return track(system, start, cfg, TrackMode::regular);
}

int discriminant_sample_count(int degree, int steps) {
  const long long wanted = 16LL * degree * steps;
  return static_cast<int>(std::min<long long>(wanted, kMaxDiscriminantSamples));
}

namespace {

// |lead * Delta| / threshold at a point of the line; below 1 means singular.
double clearance(const Polynomial& p) {
  if (p.leading_negligible()) return 0.0;
  const auto disc = discriminant(p);
  return std::abs(p.leading() * disc.delta) / singularity_threshold(p);
}

}  // namespace

CoefficientPath build_avoiding_path(const Polynomial& p, const Polynomial& q, Rng& rng,
                                    int steps) {
  const int d = std::max(p.degree(), q.degree());
  const Polynomial pp = pad_to(p, d);
  const Polynomial qq = pad_to(q, d);
  if (d < 1) throw InvalidInput("avoiding path needs degree >= 1");
  if (discriminant(pp).sigma_member) {
    throw PathConstructionError("path start lies in the singular set");
  }
  if (discriminant(qq).sigma_member) {
    throw PathConstructionError("path target lies in the singular set");
  }
  if (pp == qq) return CoefficientPath::parabolic_arc(pp, qq, 0.0);

  std::vector<double> candidates{0.0};
  std::vector<double> powers{1.0, -1.0, 2.0, -2.0, 4.0, -4.0, 8.0, -8.0};
  std::shuffle(powers.begin(), powers.end(), rng);
  candidates.insert(candidates.end(), powers.begin(), powers.end());
  constexpr int kMaxAttempts = 32;
  while (static_cast<int>(candidates.size()) < kMaxAttempts) {
    candidates.push_back(-16.0 + 32.0 * uniform01(rng));
  }

  const int samples = discriminant_sample_count(d, steps);
  double best_c = 0.0;
  double best_clearance = -1.0;
  for (const double c : candidates) {
    const auto arc = CoefficientPath::parabolic_arc(pp, qq, c);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 1; k < samples && worst > 1.0; ++k) {
      worst = std::min(worst, clearance(arc.at(static_cast<double>(k) / samples)));
    }
    if (worst > 1.0) return arc;
    if (worst > best_clearance) {
      best_clearance = worst;
      best_c = c;
    }
  }
  throw PathConstructionError("no arc constant avoided the singular set; best was c = " +
                              std::to_string(best_c) + " with clearance " +
                              std::to_string(best_clearance));
}

CoefficientPath degenerate_target_path(const Polynomial& f, double theta, int steps) {
  const int d = f.degree();
  if (d < 1) throw InvalidInput("degenerate target path needs degree >= 1");
  if (f.leading_negligible()) {
    throw InvalidInput("degenerate target path needs a non-negligible leading coefficient");
  }
  const Polynomial start = unit_start(d, f.leading() * std::polar(1.0, theta));
  const auto line = CoefficientPath::straight_line(start, f);

  const int samples = discriminant_sample_count(d, steps);
  std::vector<bool> singular(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    singular[k] = clearance(line.at(static_cast<double>(k) / samples)) <= 1.0;
  }
  // Skip the run of singular samples that ends at t = 1.
  int k = samples - 1;
  while (k >= 0 && singular[k]) --k;
  if (k < 0) {
    throw PathConstructionError("discriminant vanishes at every sample of the segment");
  }
  int last_bad = k;
  while (last_bad >= 0 && !singular[last_bad]) --last_bad;
  if (last_bad < 0) return line;
  // Midpoint sample between the last interior singular point and the
  // trailing run; every sample in between is clear.
  const int mid = (last_bad + k + 1) / 2;
  return CoefficientPath::segment_restricted(start, f, static_cast<double>(mid) / samples);
}

}  // namespace rootpath
