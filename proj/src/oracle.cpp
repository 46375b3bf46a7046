#include "rootpath/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "rootpath/errors.h"

namespace rootpath::oracle {

namespace {

Complex laplace(const ComplexMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() == 1) return m(row, cols[0]);
  Complex sum{};
  double sign = 1.0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (m(row, c) != Complex{}) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      sum += sign * m(row, c) * laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Complex brute_determinant(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() > 8) throw InvalidInput("brute-force determinant is limited to 8x8");
  if (m.rows() == 0) return Complex{1.0, 0.0};
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return laplace(m, cols, 0);
}

std::vector<Complex> grid_root_scan(const Polynomial& f, double radius, int resolution) {
  if (resolution < 64) throw InvalidInput("grid resolution must be at least 64");
  if (!(radius > 0.0)) throw InvalidInput("grid radius must be positive");
  const int n = resolution;
  const double h = 2.0 * radius / (n - 1);
  auto point = [&](int i, int j) { return Complex{-radius + i * h, -radius + j * h}; };
  std::vector<double> mag(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mag[i * n + j] = std::abs(eval(f, point(i, j)));
  }
  const Polynomial df = derivative(f);
  std::vector<Complex> found;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = mag[i * n + j];
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int a = i + di;
          const int b = j + dj;
          if ((di || dj) && a >= 0 && a < n && b >= 0 && b < n && mag[a * n + b] < v) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;
      Complex z = point(i, j);
      for (int it = 0; it < 60; ++it) {
        const Complex dv = eval(df, z);
        if (dv == Complex{}) break;
        const Complex step = eval(f, z) / dv;
        if (!is_finite(z - step)) break;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
      }
      if (std::abs(eval(f, z)) > 1e-8) continue;
      const bool seen = std::any_of(found.begin(), found.end(), [&](Complex w) {
        return std::abs(w - z) < 1e-6 * std::max(1.0, std::abs(z));
      });
      if (!seen) found.push_back(z);
    }
  }
  return found;
}

std::vector<Complex> random_separated_points(Rng& rng, int count, double radius,
                                             double separation) {
  if (count < 0) throw InvalidInput("point count must be nonnegative");
  for (int restart = 0; restart < 200; ++restart) {
    std::vector<Complex> pts;
    int tries = 0;
    while (static_cast<int>(pts.size()) < count && tries < 2000) {
      ++tries;
      const double r = radius * std::sqrt(uniform01(rng));
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * uniform01(rng));
      const bool clear = std::all_of(pts.begin(), pts.end(),
                                     [&](Complex w) { return std::abs(w - z) >= separation; });
      if (clear) pts.push_back(z);
    }
    if (static_cast<int>(pts.size()) == count) return pts;
  }
  throw Error("could not place " + std::to_string(count) + " points with separation " +
              std::to_string(separation));
}

OracleCase random_case(Rng& rng, int degree, std::vector<int> profile) {
  if (degree < 1 || degree > 30) throw InvalidInput("oracle degree must lie in 1..30");
  if (profile.empty()) profile.assign(static_cast<std::size_t>(degree), 1);
  if (std::accumulate(profile.begin(), profile.end(), 0) != degree ||
      std::any_of(profile.begin(), profile.end(), [](int m) { return m < 1; })) {
    throw InvalidInput("multiplicity profile must be positive and sum to the degree");
  }
  const auto pts = random_separated_points(rng, static_cast<int>(profile.size()), 2.0, 0.3);
  OracleCase c;
  std::string note = "random degree " + std::to_string(degree) + " profile {";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    c.true_roots.push_back({pts[i], profile[i]});
    note += (i ? "," : "") + std::to_string(profile[i]);
  }
  c.note = note + "}";
  const double lead_mod = 0.5 + 1.5 * uniform01(rng);
  c.lead = std::polar(lead_mod, 2.0 * std::numbers::pi * uniform01(rng));
  c.polynomial = from_roots(c.true_roots, c.lead);
  return c;
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<double>>& dist, double limit,
             std::vector<int>& match_right, std::vector<bool>& seen) {
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (seen[v] || dist[u][v] > limit) continue;
    seen[v] = true;
    if (match_right[v] < 0 ||
        augment(static_cast<std::size_t>(match_right[v]), dist, limit, match_right, seen)) {
      match_right[v] = static_cast<int>(u);
      return true;
    }
  }
  return false;
}

bool perfect_matching(const std::vector<std::vector<double>>& dist, double limit) {
  const std::size_t n = dist.size();
  std::vector<int> match_right(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    if (!augment(u, dist, limit, match_right, seen)) return false;
  }
  return true;
}

}  // namespace

double matching_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> all;
  all.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = std::abs(a[i] - b[j]);
      all.push_back(dist[i][j]);
    }
  }
  std::sort(all.begin(), all.end());
  std::size_t lo = 0;
  std::size_t hi = all.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(dist, all[mid])) hi = mid;
    else lo = mid + 1;
  }
  return all[lo];
}

}  // namespace rootpath::oracle
