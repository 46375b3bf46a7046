/**
 * @file acceptance.cpp
 * @brief Runs the ten acceptance criteria and prints one PASS/FAIL line each.
 */
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "rootpath/bounds.h"
#include "rootpath/certify.h"
#include "rootpath/cli.h"
#include "rootpath/complex_poly.h"
#include "rootpath/oracle.h"
#include "rootpath/resultants.h"

namespace rootpath::acceptance {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Complex random_in_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform01(rng));
  return std::polar(r, 2.0 * std::numbers::pi * uniform01(rng));
}

Complex random_lead(Rng& rng) {
  return std::polar(0.5 + 1.5 * uniform01(rng), 2.0 * std::numbers::pi * uniform01(rng));
}

Polynomial random_poly(Rng& rng, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_in_disk(rng, 1.0);
  if (std::abs(c.back()) < 0.1) c.back() = 1.0;
  return Polynomial(std::move(c));
}

Polynomial unit_minus_one(int d) {
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
  c.front() = -1.0;
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

int total_multiplicity(const std::vector<RootReport>& reports) {
  return std::accumulate(reports.begin(), reports.end(), 0,
                         [](int s, const RootReport& r) { return s + r.multiplicity; });
}

SolveOptions seeded(std::uint64_t seed) {
  SolveOptions opt;
  opt.tracker.seed = seed;
  return opt;
}

/// Generic cases for criterion 5, shared with criterion 9.
std::vector<std::pair<oracle::OracleCase, std::uint64_t>> generic_cases() {
  Rng rng(500);
  std::vector<std::pair<oracle::OracleCase, std::uint64_t>> out;
  for (int k = 0; k < 100; ++k) {
    auto c = oracle::random_case(rng, 1 + k % 12);
    out.emplace_back(std::move(c), rng());
  }
  return out;
}

std::vector<std::vector<RootWithMultiplicity>> degenerate_suite() {
  return {{{1.0, 2}},
          {{1.0, 3}, {-2.0, 1}},
          {{1.0, 2}, {-1.0, 2}, {3.0, 1}},
          {{0.0, 5}}};
}

struct ResultantPair {
  Polynomial f;
  Polynomial g;
  SylvesterFormat format;
  bool shares = false;
};

/// Pairs for criterion 7: roots in the disk of radius 1.5 with pairwise
/// separation 0.5; even indices share the first root of f.
std::vector<ResultantPair> resultant_pairs() {
  Rng rng(700);
  std::vector<ResultantPair> out;
  for (int k = 0; k < 100; ++k) {
    const int d = 1 + static_cast<int>(6.0 * uniform01(rng));
    const int e = 1 + static_cast<int>(6.0 * uniform01(rng));
    const bool shares = k % 2 == 0;
    const auto pts = oracle::random_separated_points(rng, shares ? d + e - 1 : d + e, 1.5, 0.5);
    std::vector<RootWithMultiplicity> fr;
    std::vector<RootWithMultiplicity> gr;
    for (int i = 0; i < d; ++i) fr.push_back({pts[static_cast<std::size_t>(i)], 1});
    if (shares) gr.push_back({pts[0], 1});
    for (std::size_t i = static_cast<std::size_t>(d); i < pts.size(); ++i) gr.push_back({pts[i], 1});
    out.push_back({from_roots(fr, random_lead(rng)), from_roots(gr, random_lead(rng)), {d, e}, shares});
  }
  return out;
}

struct RotationCase {
  Polynomial target;
  std::uint64_t seed_a = 0;
  std::uint64_t seed_b = 0;
};

std::vector<RotationCase> rotation_cases() {
  Rng rng(800);
  const std::vector<std::vector<int>> profiles{{2, 1, 1}, {3, 2}, {2, 2, 1, 1}, {4, 1}, {2, 3, 1, 1}};
  std::vector<RotationCase> out;
  for (int k = 0; k < 20; ++k) {
    oracle::OracleCase c;
    if (k % 4 == 3) {
      const auto& profile = profiles[static_cast<std::size_t>(k / 4)];
      c = oracle::random_case(rng, std::accumulate(profile.begin(), profile.end(), 0), profile);
    } else {
      c = oracle::random_case(rng, 2 + k % 9);
    }
    const std::uint64_t a = rng();
    const std::uint64_t b = rng();
    out.push_back({c.polynomial, a, b});
  }
  return out;
}

Outcome criterion1() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int d = 1; d <= 10; ++d) {
    const Polynomial f = unit_minus_one(d);
    const Complex r = resultant(f, derivative(f), {d, d - 1});
    const double expected = (d % 2 == 1 ? 1.0 : -1.0) * std::pow(d, d);
    worst = std::max(worst, std::abs(r - expected) / std::abs(expected));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 1.0,
          fmt("max relative error %.2e (limit 1e-9), %.4f s (limit 1 s)", worst, elapsed)};
}

Outcome criterion2() {
  Rng rng(200);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    Complex a = random_in_disk(rng, 10.0);
    while (std::abs(a) < 0.1) a = random_in_disk(rng, 10.0);
    const Complex b = random_in_disk(rng, 10.0);
    const Complex c = random_in_disk(rng, 10.0);
    const Complex expected = 4.0 * a * c - b * b;
    const Complex delta = discriminant(Polynomial{c, b, a}).delta;
    worst = std::max(worst, std::abs(delta - expected) / std::abs(expected));
  }
  return {worst <= 1e-9, fmt("1000 quadratics, max relative error %.2e (limit 1e-9)", worst)};
}

Outcome criterion3() {
  Rng rng(300);
  int holds = 0;
  for (int k = 0; k < 500; ++k) {
    const int d = 1 + static_cast<int>(6.0 * uniform01(rng));
    const int e = 1 + static_cast<int>(6.0 * uniform01(rng));
    const Polynomial f = random_poly(rng, d);
    const Polynomial g = random_poly(rng, e);
    std::vector<Complex> alpha(static_cast<std::size_t>(e));
    std::vector<Complex> beta(static_cast<std::size_t>(d));
    for (auto& x : alpha) x = random_in_disk(rng, 1.0);
    for (auto& x : beta) x = random_in_disk(rng, 1.0);
    if (combination_identity_check(f, g, {d, e}, alpha, beta)) ++holds;
  }
  return {holds == 500, fmt("identity held in %.0f of 500 cases", holds)};
}

Outcome criterion4() {
  Rng rng(400);
  int contained = 0;
  double worst_ratio = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int d = 1 + static_cast<int>(12.0 * uniform01(rng));
    std::vector<RootWithMultiplicity> roots;
    for (int i = 0; i < d; ++i) roots.push_back({random_in_disk(rng, 3.0), 1});
    const double radius = cauchy_bound(from_roots(roots, random_lead(rng))).radius;
    double largest = 0.0;
    for (const auto& r : roots) largest = std::max(largest, std::abs(r.value));
    if (largest < radius) ++contained;
    worst_ratio = std::max(worst_ratio, largest / radius);
  }
  return {contained == 200,
          fmt("%.0f of 200 root sets inside the bound, max |root|/radius %.3f", contained,
              worst_ratio)};
}

Outcome criterion5() {
  const auto cases = generic_cases();
  const auto start = Clock::now();
  double worst = 0.0;
  int bad = 0;
  for (const auto& [c, seed] : cases) {
    const auto result = solve(c.polynomial, seeded(seed));
    std::vector<Complex> found;
    bool ok = total_multiplicity(result.reports) == c.polynomial.degree();
    for (const auto& r : result.reports) {
      ok = ok && r.certified && r.multiplicity == 1;
      found.push_back(r.value);
    }
    std::vector<Complex> truth;
    for (const auto& r : c.true_roots) truth.push_back(r.value);
    const double dist = oracle::matching_distance(found, truth);
    worst = std::max(worst, dist);
    if (!ok || !(dist <= 1e-8)) ++bad;
  }
  const double elapsed = seconds_since(start);
  return {bad == 0 && elapsed < 30.0,
          fmt("%.0f of 100 cases off, max matching distance %.2e (limit 1e-8), %.2f s (limit 30 s)",
              bad, worst, elapsed)};
}

Outcome criterion6() {
  std::string detail;
  bool pass = true;
  for (const auto& roots : degenerate_suite()) {
    const auto result = solve(from_roots(roots), seeded(600));
    bool ok = result.reports.size() == roots.size();
    for (const auto& truth : roots) {
      const RootReport* best = nullptr;
      for (const auto& r : result.reports) {
        if (!best || std::abs(r.value - truth.value) < std::abs(best->value - truth.value)) best = &r;
      }
      ok = ok && best && best->multiplicity == truth.multiplicity &&
           best->derivative_check == best->multiplicity;
    }
    for (const auto& r : result.reports) ok = ok && r.derivative_check == r.multiplicity;
    if (!ok) detail += " mismatch at degree " + std::to_string(from_roots(roots).degree());
    pass = pass && ok;
  }
  return {pass, "4 degenerate targets, profiles and derivative orders" +
                    (pass ? std::string(" all agree") : detail)};
}

Outcome criterion7() {
  int wrong = 0;
  double max_shared = 0.0;
  double min_disjoint = std::numeric_limits<double>::infinity();
  double max_certificate = 0.0;
  for (const auto& pair : resultant_pairs()) {
    const double scale = pair.f.norm2() * pair.g.norm2();
    const double rel = std::abs(resultant(pair.f, pair.g, pair.format)) / scale;
    const auto zeta = common_root_certificate(pair.f, pair.g, pair.format);
    bool ok = false;
    if (pair.shares) {
      max_shared = std::max(max_shared, rel);
      if (zeta) {
        const double worst = std::max(std::abs(eval(pair.f, *zeta)), std::abs(eval(pair.g, *zeta)));
        max_certificate = std::max(max_certificate, worst);
        ok = rel < kResultantThreshold && worst <= 1e-6;
      }
    } else {
      min_disjoint = std::min(min_disjoint, rel);
      ok = rel >= kResultantThreshold && !zeta;
    }
    if (!ok) ++wrong;
  }
  return {wrong == 0,
          fmt("%.0f of 100 pairs misclassified; |res|/scale max %.2e when shared, min %.2e "
              "when disjoint",
              wrong, max_shared, min_disjoint) +
              fmt(", certificate residual max %.2e (limit 1e-6)", max_certificate)};
}

/// Bijection between the two report sets with equal multiplicities and
/// values within tol, by exhaustive nearest pairing.
bool same_reports(const std::vector<RootReport>& a, const std::vector<RootReport>& b, double tol,
                  double& worst) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& r : a) {
    std::size_t best = b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k] || b[k].multiplicity != r.multiplicity) continue;
      if (best == b.size() || std::abs(b[k].value - r.value) < std::abs(b[best].value - r.value)) {
        best = k;
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
    worst = std::max(worst, std::abs(b[best].value - r.value));
    if (!(std::abs(b[best].value - r.value) <= tol)) return false;
  }
  return true;
}

Outcome criterion8() {
  int differing = 0;
  double worst = 0.0;
  for (const auto& c : rotation_cases()) {
    const auto a = solve(c.target, seeded(c.seed_a));
    const auto b = solve(c.target, seeded(c.seed_b));
    if (!same_reports(a.reports, b.reports, 1e-8, worst)) ++differing;
  }
  return {differing == 0, fmt("%.0f of 20 targets differ across rotations, max value gap %.2e "
                              "(limit 1e-8)",
                              differing, worst)};
}

cli::SolveRequest request_for(const Polynomial& p, std::uint64_t seed) {
  cli::SolveRequest req;
  req.coefficients.assign(p.coeffs().begin(), p.coeffs().end());
  req.seed = seed;
  return req;
}

std::string render_all() {
  std::string out;
  for (const auto& [c, seed] : generic_cases()) out += cli::render_response(cli::run(request_for(c.polynomial, seed)));
  for (const auto& roots : degenerate_suite()) {
    out += cli::render_response(cli::run(request_for(from_roots(roots), 600)));
  }
  std::uint64_t seed = 900;
  for (const auto& pair : resultant_pairs()) {
    out += cli::render_response(cli::run(request_for(pair.f, seed++)));
    out += cli::render_response(cli::run(request_for(pair.g, seed++)));
  }
  for (const auto& c : rotation_cases()) {
    out += cli::render_response(cli::run(request_for(c.target, c.seed_a)));
    out += cli::render_response(cli::run(request_for(c.target, c.seed_b)));
  }
  return out;
}

Outcome criterion9() {
  const std::string first = render_all();
  const std::string second = render_all();
  return {first == second && !first.empty(),
          fmt("two renderings of %.0f bytes, ", static_cast<double>(first.size())) +
              (first == second ? "byte-identical" : "different")};
}

Outcome criterion10() {
  double worst = 0.0;
  bool solved = true;
  for (int d = 2; d <= 10; ++d) {
    const auto result = solve(unit_minus_one(d), seeded(1000 + static_cast<std::uint64_t>(d)));
    solved = solved && static_cast<int>(result.paths.size()) == d;
    for (const auto& path : result.paths) {
      for (const auto& s : path.samples) {
        worst = std::max(worst, std::abs(s.z - path.samples.front().z));
      }
    }
  }
  return {solved && worst <= 1e-10,
          fmt("max displacement %.2e (limit 1e-10) over d = 2..10", worst)};
}

}  // namespace
}  // namespace rootpath::acceptance

int main() {
  using namespace rootpath::acceptance;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"resultant of x^d - 1 and its derivative", criterion1},
      {"quadratic discriminant", criterion2},
      {"combination identity", criterion3},
      {"root modulus bound", criterion4},
      {"generic solve", criterion5},
      {"degenerate solve", criterion6},
      {"resultant vanishing dichotomy", criterion7},
      {"multiplicity independent of rotation", criterion8},
      {"deterministic output", criterion9},
      {"stationary homotopy", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
