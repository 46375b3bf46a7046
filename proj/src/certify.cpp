#include "rootpath/certify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rootpath/bounds.h"
#include "rootpath/resultants.h"

namespace rootpath {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::closed_form: return "closed_form";
    case Strategy::generic: return "generic";
    case Strategy::degenerate: return "degenerate";
  }
  return "unknown";
}

RefineResult refine(const Polynomial& f, Complex z, int max_iter, double tol) {
  const Polynomial df = derivative(f);
  RefineResult out{z};
  for (int it = 0; it < max_iter; ++it) {
    const auto [v, dv] = eval_with_derivative(f, out.value);
    if (std::abs(v) <= tol || v == Complex{}) {
      out.converged = true;
      return out;
    }
    if (std::abs(dv) < 1e-14 * residual_scale(df, out.value)) {
      return {z, out.iterations, false, true};
    }
    const Complex step = v / dv;
    const Complex next = out.value - step;
    if (!is_finite(next)) return {z, out.iterations, false, true};
    out.value = next;
    ++out.iterations;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() *
                              std::max(1.0, std::abs(out.value))) {
      out.converged = true;
      return out;
    }
  }
  out.converged = std::abs(eval(f, out.value)) <= tol;
  return out;
}

std::optional<AlphaEstimate> alpha_estimate(const Polynomial& f, Complex z) {
  const auto taylor = taylor_coefficients(f, z);
  if (taylor.size() < 2 || taylor[1] == Complex{}) return std::nullopt;
  AlphaEstimate est;
  est.beta = std::abs(taylor[0] / taylor[1]);
  for (std::size_t k = 2; k < taylor.size(); ++k) {
    const double ratio = std::abs(taylor[k] / taylor[1]);
    if (ratio > 0.0) est.gamma = std::max(est.gamma, std::pow(ratio, 1.0 / (k - 1)));
  }
  est.alpha = est.beta * est.gamma;
  return est;
}

bool alpha_certificate(const Polynomial& f, Complex z) {
  const auto est = alpha_estimate(f, z);
  return est && est->alpha < kAlphaZero;
}

namespace {

// Cluster label per endpoint; labels are numbered by first appearance.
std::vector<int> single_linkage(std::span<const Complex> pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (std::abs(pts[a] - pts[b]) <= radius) {
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<int> label(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace

std::vector<RootReport> cluster(std::span<const Complex> endpoints, const Polynomial& f,
                                double tol) {
  if (endpoints.size() != static_cast<std::size_t>(f.degree())) {
    throw InvalidInput("clustering needs exactly d endpoints");
  }
  if (!(tol > 0.0)) throw InvalidInput("clustering radius must be positive");
  const auto labels = single_linkage(endpoints, tol);
  if (labels != single_linkage(endpoints, 2.0 * tol)) {
    throw ClusterAmbiguityError("endpoint clusters change between linking radius " +
                                std::to_string(tol) + " and twice that; increase the step count");
  }
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<RootReport> reports(static_cast<std::size_t>(count));
  std::vector<Complex> sums(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    reports[labels[i]].path_indices.push_back(static_cast<int>(i) + 1);
    sums[labels[i]] += endpoints[i];
  }
  for (int c = 0; c < count; ++c) {
    auto& r = reports[c];
    r.multiplicity = static_cast<int>(r.path_indices.size());
    const Complex centroid = sums[c] / static_cast<double>(r.multiplicity);
    const Polynomial target = r.multiplicity == 1 ? f : derivative(f, r.multiplicity - 1);
    const auto refined = refine(target, centroid);
    // A refinement that wanders outside the cluster found some other root.
    r.value = !refined.singular && std::abs(refined.value - centroid) <= 2.0 * tol
                  ? refined.value
                  : centroid;
    r.residual = std::abs(eval(f, r.value));
  }
  return reports;
}

int multiplicity_by_derivatives(const Polynomial& f, Complex rho, double threshold) {
  const auto taylor = taylor_coefficients(f, rho);
  std::vector<Complex> abs_coeffs;
  abs_coeffs.reserve(taylor.size());
  for (const auto& c : f.coeffs()) abs_coeffs.emplace_back(std::abs(c));
  const auto bound = taylor_coefficients(Polynomial(std::move(abs_coeffs)), std::abs(rho));
  if (std::abs(taylor[0]) > threshold * bound[0].real()) {
    throw InvalidInput("point is not a root within the multiplicity threshold");
  }
  for (std::size_t k = 1; k < taylor.size(); ++k) {
    if (std::abs(taylor[k]) > threshold * bound[k].real()) return static_cast<int>(k);
  }
  throw Error("every derivative vanishes at the point; polynomial is numerically zero");
}

namespace {

struct Attempt {
  bool ok = false;
  bool collapsed_at_end = false;
  std::string failure;
  std::vector<RootReport> reports;
  std::vector<TrackedPath> paths;
  double escape_radius = 0.0;
  double cluster_tolerance = 0.0;
  double restriction = 0.0;
  long newton_steps = 0;
};

Polynomial rotated_unit_start(int d, double theta) {
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
  c.front() = -std::polar(1.0, theta);
  c.back() = std::polar(1.0, theta);
  return Polynomial(std::move(c));
}

double clustering_radius(const TrackResult& tr) {
  double step = 0.0;
  for (const auto& p : tr.paths) step = std::max(step, p.final_step);
  return std::max(1e-6 * tr.escape_radius, 10.0 * step);
}

std::vector<Complex> endpoints_of(const TrackResult& tr) {
  std::vector<Complex> out;
  out.reserve(tr.paths.size());
  for (const auto& p : tr.paths) out.push_back(p.samples.back().z);
  return out;
}

void annotate(std::vector<RootReport>& reports, const Polynomial& p, const SolveOptions& opt) {
  for (auto& r : reports) {
    try {
      r.derivative_check = multiplicity_by_derivatives(p, r.value, opt.multiplicity_threshold);
    } catch (const Error&) {
      r.derivative_check = 0;
    }
    r.certified = opt.certify && r.multiplicity == 1 && alpha_certificate(p, r.value);
  }
}

// Same roots with the same multiplicities, values within 1e-6 (relative
// to 1 + |value|).
bool same_multiset(const std::vector<RootReport>& expected, const std::vector<RootReport>& got) {
  if (expected.size() != got.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& e : expected) {
    std::size_t best = got.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (used[i] || got[i].multiplicity != e.multiplicity) continue;
      const double dist = std::abs(got[i].value - e.value);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best == got.size() || best_dist > 1e-6 * (1.0 + std::abs(e.value))) return false;
    used[best] = true;
  }
  return true;
}

Attempt generic_attempt(const Polynomial& p, double theta, const TrackerConfig& cfg,
                        const SolveOptions& opt, Rng& rng) {
  Attempt a;
  const int d = p.degree();
  std::optional<HomotopySystem> system;
  try {
    if (opt.path == PathShape::parabola) {
      system.emplace(build_avoiding_path(rotated_unit_start(d, theta), p, rng, cfg.steps));
    } else {
      system.emplace(CoefficientPath::gamma_rotated(p, theta));
    }
  } catch (const PathConstructionError& e) {
    a.failure = e.what();
    return a;
  }
  const auto start = roots_of_unity_start(d);
  auto tr = track(*system, start, cfg, TrackMode::regular);
  a.newton_steps = tr.newton_steps;
  a.escape_radius = tr.escape_radius;
  a.collapsed_at_end = tr.collapsed_at_end;
  if (!tr.success) {
    a.failure = tr.failure;
    a.paths = std::move(tr.paths);
    return a;
  }
  const auto endpoints = endpoints_of(tr);
  std::vector<Complex> polished;
  polished.reserve(endpoints.size());
  for (const auto& z : endpoints) polished.push_back(refine(p, z).value);
  a.cluster_tolerance = clustering_radius(tr);
  a.paths = std::move(tr.paths);
  try {
    a.reports = cluster(polished, p, a.cluster_tolerance);
  } catch (const ClusterAmbiguityError& e) {
    a.failure = e.what();
    return a;
  }
  if (a.reports.size() != endpoints.size()) {
    a.failure = "two paths of a non-singular target ended at the same root";
    a.collapsed_at_end = true;
    return a;
  }
  annotate(a.reports, p, opt);
  a.ok = true;
  return a;
}

Attempt degenerate_attempt(const Polynomial& p, double theta, const TrackerConfig& cfg,
                           const SolveOptions& opt, Rng& rng) {
  Attempt a;
  const int d = p.degree();
  std::optional<CoefficientPath> path;
  try {
    path.emplace(degenerate_target_path(p, theta, cfg.steps));
  } catch (const PathConstructionError& e) {
    a.failure = e.what();
    return a;
  }
  a.restriction = path->restriction();

  std::vector<Complex> start;
  if (a.restriction > 0.0) {
    // The restricted path starts at a non-singular polynomial whose roots
    // come from a generic solve.
    SolveOptions sub = opt;
    sub.start = StartSystem::gamma;
    sub.path = PathShape::line;
    sub.deflation_check = false;
    sub.tracker.seed = rng();
    try {
      const auto solved = solve(path->at(0.0), sub);
      a.newton_steps += solved.diagnostics.newton_steps;
      for (const auto& r : solved.reports) {
        start.insert(start.end(), static_cast<std::size_t>(r.multiplicity), r.value);
      }
      if (solved.reports.size() != static_cast<std::size_t>(d)) {
        a.failure = "restricted path starts at a polynomial with a multiple root";
        return a;
      }
    } catch (const Error& e) {
      a.failure = std::string("solving the restricted start failed: ") + e.what();
      return a;
    }
  } else {
    start = roots_of_unity_start(d);
  }

  auto tr = track(HomotopySystem(*path), start, cfg, TrackMode::singular_endpoint);
  a.newton_steps += tr.newton_steps;
  a.escape_radius = tr.escape_radius;
  if (!tr.success) {
    a.failure = tr.failure;
    a.paths = std::move(tr.paths);
    return a;
  }
  const auto endpoints = endpoints_of(tr);
  a.cluster_tolerance = clustering_radius(tr);
  a.paths = std::move(tr.paths);
  try {
    a.reports = cluster(endpoints, p, a.cluster_tolerance);
  } catch (const ClusterAmbiguityError& e) {
    a.failure = e.what();
    return a;
  }
  annotate(a.reports, p, opt);
  for (const auto& r : a.reports) {
    if (r.derivative_check != r.multiplicity) {
      a.failure = "cluster of " + std::to_string(r.multiplicity) +
                  " paths disagrees with derivative multiplicity " +
                  std::to_string(r.derivative_check);
      return a;
    }
  }

  if (opt.deflation_check) {
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      const auto& r = a.reports[i];
      if (r.multiplicity == 1) continue;
      std::vector<RootReport> others;
      for (std::size_t j = 0; j < a.reports.size(); ++j) {
        if (j != i) others.push_back(a.reports[j]);
      }
      try {
        const Polynomial quotient = deflate(p, r.value, r.multiplicity);
        std::vector<RootReport> found;
        if (quotient.degree() >= 1) {
          SolveOptions sub = opt;
          sub.deflation_check = false;
          sub.tracker.seed = rng();
          const auto solved = solve(quotient, sub);
          a.newton_steps += solved.diagnostics.newton_steps;
          found = solved.reports;
        }
        if (!same_multiset(others, found)) {
          a.failure = "deflated quotient disagrees with the remaining clusters";
          return a;
        }
      } catch (const Error& e) {
        a.failure = std::string("deflation cross-check failed: ") + e.what();
        return a;
      }
    }
  }
  a.ok = true;
  return a;
}

}  // namespace

SolveResult solve(const Polynomial& f, const SolveOptions& opt) {
  validate(opt.tracker);
  const Polynomial p = f.trimmed();
  const int d = p.degree();
  if (d < 1) throw InvalidInput("polynomial has degree 0 after trimming; nothing to solve");

  SolveResult result;
  auto& diag = result.diagnostics;
  diag.degree = d;

  if (d == 1) {
    RootReport r;
    r.value = -p[0] / p[1];
    r.residual = std::abs(eval(p, r.value));
    r.path_indices = {1};
    r.derivative_check = 1;
    r.certified = opt.certify && alpha_certificate(p, r.value);
    result.reports.push_back(r);
    diag.discriminant_modulus = 1.0;
    diag.escape_radius = cauchy_bound(p).radius;
    diag.strategy = Strategy::closed_form;
    return result;
  }

  const auto disc = discriminant(p);
  diag.discriminant_modulus = std::abs(disc.delta);
  diag.sigma_member = disc.sigma_member;

  Rng rng(opt.tracker.seed);
  TrackerConfig cfg = opt.tracker;
  bool try_degenerate = disc.sigma_member;
  Attempt last;
  bool last_degenerate = try_degenerate;
  for (int attempt = 0; attempt <= opt.tracker.max_restarts; ++attempt) {
    const double theta =
        (opt.start == StartSystem::unit && attempt == 0) ? 0.0 : random_angle(rng);
    const bool degenerate = try_degenerate;
    last_degenerate = degenerate;
    last = degenerate ? degenerate_attempt(p, theta, cfg, opt, rng)
                      : generic_attempt(p, theta, cfg, opt, rng);
    diag.newton_steps += last.newton_steps;
    if (last.ok) {
      result.reports = std::move(last.reports);
      result.paths = std::move(last.paths);
      diag.escape_radius = last.escape_radius;
      diag.restarts = attempt;
      diag.steps = cfg.steps;
      diag.strategy = degenerate ? Strategy::degenerate : Strategy::generic;
      diag.cluster_tolerance = last.cluster_tolerance;
      diag.restriction = last.restriction;
      return result;
    }
    // A non-singular target whose paths collapse at t = 1 alternates between
    // the endgame strategy and the generic one.
    if (!disc.sigma_member) try_degenerate = !degenerate && last.collapsed_at_end;
    cfg.steps *= 2;
  }
  result.reports = std::move(last.reports);
  result.paths = std::move(last.paths);
  diag.escape_radius = last.escape_radius;
  diag.restarts = opt.tracker.max_restarts;
  diag.steps = cfg.steps / 2;
  diag.strategy = last_degenerate ? Strategy::degenerate : Strategy::generic;
  throw SolveError("all " + std::to_string(opt.tracker.max_restarts + 1) +
                       " attempts failed; last failure: " + last.failure,
                   std::move(result));
}

}  // namespace rootpath
