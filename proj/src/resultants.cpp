#include "rootpath/resultants.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rootpath/certify.h"
#include "rootpath/errors.h"

namespace rootpath {

namespace {

std::vector<Complex> padded(const Polynomial& p, int degree, const char* name) {
  const auto c = p.coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < out.size()) {
      out[i] = c[i];
    } else if (c[i] != Complex{}) {
      throw InvalidInput(std::string(name) + " has a nonzero coefficient above the requested degree");
    }
  }
  return out;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SylvesterMatrix sylvester(const Polynomial& f, const Polynomial& g, SylvesterFormat format) {
  const int d = format.d;
  const int e = format.e;
  if (d < 1 || e < 1) {
    throw InvalidInput("Sylvester format needs d, e >= 1 (got " + std::to_string(d) + ", " +
                       std::to_string(e) + ")");
  }
  const auto a = padded(f, d, "f");
  const auto b = padded(g, e, "g");
  const std::size_t n = static_cast<std::size_t>(d + e);
  ComplexMatrix m(n, n);
  for (int r = 0; r < e; ++r) {
    for (int j = 0; j <= d; ++j) m(r, r + j) = a[j];
  }
  for (int r = 0; r < d; ++r) {
    for (int j = 0; j <= e; ++j) m(e + r, r + j) = b[j];
  }
  return {std::move(m), format};
}

Complex determinant(const ComplexMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  ComplexMatrix m = input;
  Complex det{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(m(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::abs(m(r, k));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex{};
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    const Complex p = m(k, k);
    det *= p;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex factor = m(r, k) / p;
      if (factor == Complex{}) continue;
      for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return det;
}

Complex resultant(const Polynomial& f, const Polynomial& g, SylvesterFormat format) {
  const int d = format.d;
  const int e = format.e;
  if (d >= 1 && e == 0) return std::pow(padded(g, 0, "g")[0], d);
  if (d == 0 && e >= 1) return std::pow(padded(f, 0, "f")[0], e);
  return determinant(sylvester(f, g, format));
}

double singularity_threshold(const Polynomial& p) {
  const int d = p.degree();
  const double scale = std::pow(p.max_abs(), 2 * d - 1);
  return kSingularityThreshold * std::max(1.0, scale);
}

DiscriminantValue discriminant(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw InvalidInput("discriminant needs formal degree >= 1");
  const Complex lead = p.leading();
  Complex delta{1.0, 0.0};
  if (d >= 2) {
    auto syl = sylvester(p, derivative(p), {d, d - 1});
    // The last column is lead * (0, ..., 1 [row e-1], 0, ..., d [last row]).
    const std::size_t n = syl.entries.rows();
    const std::size_t last_f_row = static_cast<std::size_t>(d - 2);
    for (std::size_t r = 0; r < n; ++r) syl.entries(r, n - 1) = Complex{};
    syl.entries(last_f_row, n - 1) = 1.0;
    syl.entries(n - 1, n - 1) = static_cast<double>(d);
    delta = determinant(syl.entries);
  }
  const bool member = p.leading_negligible() ||
                      std::abs(lead * delta) <= singularity_threshold(p);
  return {delta, member};
}

std::vector<Complex> row_times(std::span<const Complex> row, const ComplexMatrix& m) {
  if (row.size() != m.rows()) throw InvalidInput("row vector length does not match matrix");
  std::vector<Complex> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r] == Complex{}) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += row[r] * m(r, c);
  }
  return out;
}

bool combination_identity_check(const Polynomial& f, const Polynomial& g, SylvesterFormat format,
                                std::span<const Complex> alpha, std::span<const Complex> beta) {
  const auto syl = sylvester(f, g, format);
  if (alpha.size() != static_cast<std::size_t>(format.e) ||
      beta.size() != static_cast<std::size_t>(format.d)) {
    throw InvalidInput("combination vectors must have e and d entries");
  }
  std::vector<Complex> row(alpha.begin(), alpha.end());
  row.insert(row.end(), beta.begin(), beta.end());
  const auto u = row_times(row, syl.entries);

  const Polynomial fp(padded(f, format.d, "f"));
  const Polynomial gp(padded(g, format.e, "g"));
  const Polynomial combo = Polynomial(std::vector<Complex>(alpha.begin(), alpha.end())) * fp +
                           Polynomial(std::vector<Complex>(beta.begin(), beta.end())) * gp;
  const auto v = combo.coeffs();
  // alpha*f and beta*g both have d+e coefficients.
  if (v.size() != u.size()) return false;

  double scale = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) scale = std::max({scale, std::abs(u[i]), std::abs(v[i])});
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i] - v[i]) > 1e-10 * scale) return false;
  }
  return true;
}

std::optional<Complex> common_root_certificate(const Polynomial& f, const Polynomial& g,
                                               SylvesterFormat format) {
  const Polynomial fp(padded(f, format.d, "f"));
  const Polynomial gp(padded(g, format.e, "g"));
  if (fp.leading() == Complex{} || gp.leading() == Complex{}) {
    throw InvalidInput("common_root_certificate needs nonzero leading coefficients");
  }
  const Complex res = resultant(fp, gp, format);
  if (std::abs(res) > kResultantThreshold * fp.norm2() * gp.norm2()) return std::nullopt;

  const auto solved = solve(fp, SolveOptions{});
  double best = std::numeric_limits<double>::infinity();
  Complex best_root{};
  for (const auto& report : solved.reports) {
    const double r = std::abs(eval(gp, report.value));
    if (r < best) {
      best = r;
      best_root = report.value;
    }
  }
  const double limit = 1e-6 * (1.0 + gp.max_abs());
  if (!(best <= limit)) {
    throw Error("resultant " + std::to_string(std::abs(res)) +
                " is below threshold but no root of f is a root of g (min |g| = " +
                std::to_string(best) + "); numerically borderline pair");
  }
  return best_root;
}

}  // namespace rootpath
